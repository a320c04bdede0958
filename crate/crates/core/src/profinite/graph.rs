use std::collections::{BTreeSet, VecDeque};

use super::ProfiniteError;

/// A reflexive symmetric relation on the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelGraph {
    /// Sorted neighbours of each vertex, the vertex itself included.
    adj: Vec<Vec<usize>>,
}

impl RelGraph {
    pub fn new(n: usize, related: impl IntoIterator<Item = (usize, usize)>) -> Result<RelGraph, ProfiniteError> {
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for (u, v) in related {
            if u >= n || v >= n {
                return Err(ProfiniteError::Invalid(format!("pair ({u}, {v}) outside {n} vertices")));
            }
            adj[u].insert(v);
        }
        for u in 0..n {
            if !adj[u].contains(&u) {
                return Err(ProfiniteError::NotReflexive(u));
            }
            if let Some(&v) = adj[u].iter().find(|&&v| !adj[v].contains(&u)) {
                return Err(ProfiniteError::NotSymmetric(u, v));
            }
        }
        Ok(RelGraph { adj: adj.into_iter().map(|s| s.into_iter().collect()).collect() })
    }

    /// The equality relation on `n` vertices.
    pub fn discrete(n: usize) -> RelGraph {
        RelGraph { adj: (0..n).map(|v| vec![v]).collect() }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn related(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbours(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    /// Related ordered pairs in lexicographic order.
    pub fn related_pairs(&self) -> Vec<(usize, usize)> {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().map(move |&v| (u, v))).collect()
    }

    pub fn pair_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    /// Whether `f`, a map from this graph's vertices, sends related pairs
    /// of this graph to related pairs of `target`.
    pub fn preserves(&self, f: &[usize], target: &RelGraph) -> bool {
        f.len() == self.vertex_count()
            && f.iter().all(|&y| y < target.vertex_count())
            && self.related_pairs().into_iter().all(|(u, v)| target.related(f[u], f[v]))
    }
}

/// Relation graphs `G_0 ← G_1 ← ...` with relation-preserving transitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelGraphTower {
    levels: Vec<RelGraph>,
    /// `transitions[n]` maps level `n + 1` to level `n`.
    transitions: Vec<Vec<usize>>,
}

impl RelGraphTower {
    pub fn new(levels: Vec<RelGraph>, transitions: Vec<Vec<usize>>) -> Result<RelGraphTower, ProfiniteError> {
        if transitions.len() + 1 != levels.len().max(1) {
            return Err(ProfiniteError::Invalid("a tower needs one transition per adjacent pair of levels".into()));
        }
        for (n, t) in transitions.iter().enumerate() {
            if !levels[n + 1].preserves(t, &levels[n]) {
                return Err(ProfiniteError::RelationNotPreserved { level: n });
            }
        }
        Ok(RelGraphTower { levels, transitions })
    }

    pub fn levels(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, n: usize) -> &RelGraph {
        &self.levels[n]
    }

    pub fn transition(&self, n: usize) -> &[usize] {
        &self.transitions[n]
    }
}

/// Vertices reachable from `v`, by breadth-first search.
pub fn connected_component(g: &RelGraph, v: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([v]);
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbours(u) {
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Component index of every vertex, numbered by least member.
pub fn components(g: &RelGraph) -> Vec<usize> {
    let mut label = vec![usize::MAX; g.vertex_count()];
    let mut next = 0;
    for v in 0..g.vertex_count() {
        if label[v] == usize::MAX {
            for u in connected_component(g, v) {
                label[u] = next;
            }
            next += 1;
        }
    }
    label
}

/// Whether every component at every level `≤ depth` is a single vertex.
pub fn is_totally_disconnected(t: &RelGraphTower, depth: usize) -> Result<bool, ProfiniteError> {
    if depth >= t.levels() {
        return Err(ProfiniteError::DepthOutOfRange { depth, levels: t.levels() });
    }
    Ok(t.levels[..=depth].iter().all(|g| g.pair_count() == g.vertex_count()))
}

/// A map into ℕ from a finite level, bounded as a map into `Fin(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedMap {
    pub k: u64,
    pub values: Vec<u64>,
}

pub fn bound_levelwise_nat_map(values: &[u64]) -> BoundedMap {
    let k = values.iter().max().map_or(0, |m| m + 1);
    BoundedMap { k, values: values.to_vec() }
}
