//! Sequential towers of finite sets: spectra of truncated presentations,
//! closed subsets given levelwise, levelwise maps and relation graphs.

mod closed;
mod graph;
mod levelwise;
mod tower;

use thiserror::Error;

use crate::boolalg::BoolAlgError;
use crate::cap::CapExceeded;

pub use closed::{closed_from_decidables, constraint_witness, emptiness_witness, points_at_depth, ClosedTower};
pub use graph::{
    bound_levelwise_nat_map, components, connected_component, is_totally_disconnected, BoundedMap, RelGraph,
    RelGraphTower,
};
pub use levelwise::{levelwise_factor, llpo_tower, LevelwiseFactorization, LevelwiseMap};
pub use tower::{
    generator_constraint, spectrum_tower, truncation_tower, AlgebraTower, CountablePresentation, GeneratorSupply,
    RelationFamily,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfiniteError {
    #[error(transparent)]
    CapExceeded(#[from] CapExceeded),
    #[error(transparent)]
    Algebra(#[from] BoolAlgError),
    #[error("transition from level {level} is not a map into level {}", level - 1)]
    InvalidTransition { level: usize },
    #[error("square at level {level} does not commute")]
    SquareNotCommuting { level: usize },
    #[error("level {level} is not saturated")]
    NotSaturated { level: usize },
    #[error("depth {depth} exceeds the {levels} available levels")]
    DepthOutOfRange { depth: usize, levels: usize },
    #[error("vertex {0} is not related to itself")]
    NotReflexive(usize),
    #[error("({0}, {1}) is related but ({1}, {0}) is not")]
    NotSymmetric(usize, usize),
    #[error("transition into level {level} does not preserve the relation")]
    RelationNotPreserved { level: usize },
    #[error("{0}")]
    Invalid(String),
}

/// A tower of finite sets `S_0 ← S_1 ← S_2 ← ...`, each point carrying a
/// display label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqDiagram {
    labels: Vec<Vec<String>>,
    /// `transitions[n]` maps level `n + 1` to level `n`.
    transitions: Vec<Vec<usize>>,
}

impl SeqDiagram {
    pub fn new(labels: Vec<Vec<String>>, transitions: Vec<Vec<usize>>) -> Result<SeqDiagram, ProfiniteError> {
        if transitions.len() + 1 != labels.len().max(1) {
            return Err(ProfiniteError::Invalid(format!(
                "{} levels need {} transitions, got {}",
                labels.len(),
                labels.len().saturating_sub(1),
                transitions.len()
            )));
        }
        for (n, t) in transitions.iter().enumerate() {
            if t.len() != labels[n + 1].len() || t.iter().any(|&x| x >= labels[n].len()) {
                return Err(ProfiniteError::InvalidTransition { level: n + 1 });
            }
        }
        Ok(SeqDiagram { labels, transitions })
    }

    /// The Cantor tower: level `n` holds the `2^n` words of length `n` in
    /// lexicographic order, and transitions drop the last bit.
    pub fn cantor(depth: usize) -> SeqDiagram {
        let labels = (0..=depth)
            .map(|n| (0..1usize << n).map(|k| word_label(k, n)).collect())
            .collect();
        let transitions = (1..=depth).map(|n| (0..1usize << n).map(|k| k >> 1).collect()).collect();
        SeqDiagram { labels, transitions }
    }

    pub fn levels(&self) -> usize {
        self.labels.len()
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.labels[n].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn label(&self, n: usize, i: usize) -> &str {
        &self.labels[n][i]
    }

    pub fn labels(&self, n: usize) -> &[String] {
        &self.labels[n]
    }

    /// The map from level `n + 1` to level `n`.
    pub fn transition(&self, n: usize) -> &[usize] {
        &self.transitions[n]
    }

    pub(crate) fn check_depth(&self, depth: usize) -> Result<(), ProfiniteError> {
        if depth >= self.levels() {
            return Err(ProfiniteError::DepthOutOfRange { depth, levels: self.levels() });
        }
        Ok(())
    }
}

pub(crate) fn word_label(k: usize, n: usize) -> String {
    (0..n).map(|i| if (k >> (n - 1 - i)) & 1 == 1 { '1' } else { '0' }).collect()
}
