use crate::cap::Cap;
use crate::profinite::{RelGraph, RelGraphTower};

use super::IntervalError;

fn path_pairs(size: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..size).flat_map(move |i| (i.saturating_sub(1)..(i + 2).min(size)).map(move |j| (i, j)))
}

/// `Fin(2^n)` with `i ~ j ⟺ |i − j| ≤ 1`.
pub fn interval_graph(n: usize, cap: Cap) -> Result<RelGraph, IntervalError> {
    cap.check(n)?;
    let size = 1usize << n;
    Ok(RelGraph::new(size, path_pairs(size)).expect("the path relation is reflexive and symmetric"))
}

/// The interval graph with the two end vertices also related.
pub fn circle_graph(n: usize, cap: Cap) -> Result<RelGraph, IntervalError> {
    cap.check(n)?;
    let size = 1usize << n;
    let wrap = [(0, size - 1), (size - 1, 0)];
    Ok(RelGraph::new(size, path_pairs(size).chain(wrap)).expect("the cycle relation is reflexive and symmetric"))
}

/// Dropping the last bit: `k ↦ ⌊k/2⌋` from level `n + 1` to level `n`.
pub fn restrict_graph_map(n: usize, cap: Cap) -> Result<Vec<usize>, IntervalError> {
    cap.check(n + 1)?;
    Ok((0..1usize << (n + 1)).map(|k| k >> 1).collect())
}

fn tower(depth: usize, cap: Cap, level: fn(usize, Cap) -> Result<RelGraph, IntervalError>) -> Result<RelGraphTower, IntervalError> {
    let levels = (0..=depth).map(|n| level(n, cap)).collect::<Result<Vec<_>, _>>()?;
    let transitions = (0..depth).map(|n| restrict_graph_map(n, cap)).collect::<Result<Vec<_>, _>>()?;
    Ok(RelGraphTower::new(levels, transitions)?)
}

/// Interval graphs at levels `0..=depth` with the restriction maps.
pub fn interval_tower(depth: usize, cap: Cap) -> Result<RelGraphTower, IntervalError> {
    tower(depth, cap, interval_graph)
}

/// Circle graphs at levels `0..=depth` with the restriction maps.
pub fn circle_tower(depth: usize, cap: Cap) -> Result<RelGraphTower, IntervalError> {
    tower(depth, cap, circle_graph)
}
