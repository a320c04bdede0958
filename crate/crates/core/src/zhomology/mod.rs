//! Integer cochain complexes of length three, Smith normal form, and the
//! Čech complexes of finite covers and relation graphs.

mod cech;
mod cohomology;
mod complex;
mod matrix;
mod snf;

use thiserror::Error;

use crate::cap::CapExceeded;
use crate::interval::IntervalError;

pub use cech::{cech_complex, graph_cech_complex, induced_cochain_map, CochainMap, Coefficients, FiniteCover};
pub use cohomology::{
    circle_cohomology, graph_cohomology, interval_cohomology, stabilization_report, CohomologyReport,
    StabilizationReport,
};
pub use complex::{homology, AbInvariants, ChainComplexZ, Homology};
pub use matrix::IntMatrix;
pub use snf::{invariant_factors, kernel_basis, rank, snf, snf_with, SmithForm, SnfOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error(transparent)]
    CapExceeded(#[from] CapExceeded),
    #[error("complex invariant violated: {0}")]
    InvariantViolated(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the vertex map does not preserve the relation")]
    RelationNotPreserved,
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}

impl From<IntervalError> for HomologyError {
    fn from(e: IntervalError) -> HomologyError {
        match e {
            IntervalError::CapExceeded(c) => HomologyError::CapExceeded(c),
            other => HomologyError::Invalid(other.to_string()),
        }
    }
}
