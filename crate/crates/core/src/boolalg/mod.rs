//! Finitely presented Boolean algebras and their spectra.

mod algebra;
mod binfty;
mod morphism;
mod omniscience;
mod presentation;
mod product;
mod separation;
mod term;

use thiserror::Error;

use crate::cap::CapExceeded;

pub use algebra::{check_duality, spectrum, DualityReport, ElementVec, FinBoolAlg};
pub use binfty::{binfty_normal_form, binfty_one_hot, binfty_spectrum, binfty_zero_point, NormalFormBInfty};
pub use morphism::{
    analyze_morphism, epi_mono_factor, hom, hom_from_pairs, identity, EpiMonoFactorization, Morphism,
    MorphismReport,
};
pub use omniscience::{
    first_one_sequence, generator_index, llpo_map, llpo_split, markov_index, minimal_join_witness,
    wlpo_counterexample, Decoded, LlpoReport, WlpoReport, WlpoVerdict,
};
pub use presentation::{product_pair, Presentation, LEFT_PREFIX, PRODUCT_SIDE, RIGHT_PREFIX};
pub use product::{ProductSpectrum, Side};
pub use separation::{separate_closed, Separation};
pub use term::Term;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoolAlgError {
    #[error(transparent)]
    CapExceeded(#[from] CapExceeded),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("no image given for generator `{0}`")]
    MissingImage(String),
    #[error("relation {0} of the source is not sent to zero")]
    RelationNotKilled(usize),
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the closed sets are not disjoint")]
    NotDisjoint,
    #[error("{0}")]
    Invalid(String),
}
