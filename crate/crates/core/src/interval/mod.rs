//! Exact dyadic arithmetic on the unit interval: truncated binary
//! expansions, nearness, the interval and circle graph towers, and images
//! of decidable subsets of Cantor space.

mod dyadic;
mod graphs;
mod union;
mod word;

use thiserror::Error;

use crate::cap::CapExceeded;
use crate::profinite::ProfiniteError;

pub use dyadic::{Dyadic, DyadicParseError};
pub use graphs::{circle_graph, circle_tower, interval_graph, interval_tower, restrict_graph_map};
pub use union::{
    complement_closed_union, complement_open_union, cylinder_image, decidable_image, Interval, IntervalUnion,
    UnionKind,
};
pub use word::{cs_fiber, cs_value, near, near_companion, near_companion_witness, BitWord, Expansion};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error(transparent)]
    CapExceeded(#[from] CapExceeded),
    #[error("words of lengths {left} and {right} cannot be compared")]
    LengthMismatch { left: usize, right: usize },
    #[error("{0} is outside [0, 1]")]
    OutOfRange(Dyadic),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] ProfiniteError),
    #[error("{0}")]
    Invalid(String),
}
