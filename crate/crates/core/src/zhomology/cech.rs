use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::{ChainComplexZ, HomologyError, IntMatrix};
use crate::profinite::RelGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficients {
    /// `A_x = ℤ`.
    TrivialZ,
    /// `A_x = ℤ^{T_x}`.
    FiberPowers,
}

/// A finite family of finite sets `T_x` over a finite base, with
/// coefficient groups `A_x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCover {
    /// `|T_x|` for each base point `x`.
    pub fibers: Vec<usize>,
    pub coefficients: Coefficients,
}

impl FiniteCover {
    fn coeff_dim(&self, x: usize) -> usize {
        match self.coefficients {
            Coefficients::TrivialZ => 1,
            Coefficients::FiberPowers => self.fibers[x],
        }
    }

    /// Dimension of `Π_x A_x^{T_x^{p+1}}`.
    pub fn degree_dim(&self, p: u32) -> usize {
        (0..self.fibers.len()).map(|x| self.fibers[x].pow(p + 1) * self.coeff_dim(x)).sum()
    }

    fn offsets(&self, p: u32) -> Vec<usize> {
        let mut acc = 0;
        (0..self.fibers.len())
            .map(|x| {
                let o = acc;
                acc += self.fibers[x].pow(p + 1) * self.coeff_dim(x);
                o
            })
            .collect()
    }

    fn labels(&self, p: u32) -> Vec<String> {
        let mut out = Vec::new();
        for x in 0..self.fibers.len() {
            let t = self.fibers[x];
            for k in 0..t.pow(p + 1) {
                let tuple: Vec<String> =
                    (0..=p).rev().map(|i| ((k / t.pow(i)) % t).to_string()).collect();
                for c in 0..self.coeff_dim(x) {
                    let coeff = match self.coefficients {
                        Coefficients::TrivialZ => String::new(),
                        Coefficients::FiberPowers => format!("[{c}]"),
                    };
                    out.push(format!("{x}:({}){coeff}", tuple.join(",")));
                }
            }
        }
        out
    }
}

fn bump(m: &mut IntMatrix, i: usize, j: usize, by: i64) {
    *m.entry_mut(i, j) += BigInt::from(by);
}

/// The Čech complex `Π_x A_x^{T_x} → Π_x A_x^{T_x²} → Π_x A_x^{T_x³}` with
/// `d0(α)(u,v) = α(v) − α(u)` and `d1(β)(u,v,w) = β(v,w) − β(u,w) + β(u,v)`.
/// Degenerate tuples are included.
pub fn cech_complex(cov: &FiniteCover) -> Result<ChainComplexZ, HomologyError> {
    let (o0, o1, o2) = (cov.offsets(0), cov.offsets(1), cov.offsets(2));
    let mut d0 = IntMatrix::zeros(cov.degree_dim(1), cov.degree_dim(0));
    let mut d1 = IntMatrix::zeros(cov.degree_dim(2), cov.degree_dim(1));
    for (x, &t) in cov.fibers.iter().enumerate() {
        let a = cov.coeff_dim(x);
        let i0 = |u: usize, c: usize| o0[x] + u * a + c;
        let i1 = |u: usize, v: usize, c: usize| o1[x] + (u * t + v) * a + c;
        let i2 = |u: usize, v: usize, w: usize, c: usize| o2[x] + ((u * t + v) * t + w) * a + c;
        for c in 0..a {
            for u in 0..t {
                for v in 0..t {
                    bump(&mut d0, i1(u, v, c), i0(v, c), 1);
                    bump(&mut d0, i1(u, v, c), i0(u, c), -1);
                    for w in 0..t {
                        let row = i2(u, v, w, c);
                        bump(&mut d1, row, i1(v, w, c), 1);
                        bump(&mut d1, row, i1(u, w, c), -1);
                        bump(&mut d1, row, i1(u, v, c), 1);
                    }
                }
            }
        }
    }
    ChainComplexZ::new(None, d0, d1, [cov.labels(0), cov.labels(1), cov.labels(2)])
}

/// Related pairs and pairwise related triples of a graph, in
/// lexicographic order.
pub(crate) struct Simplices {
    pub pairs: Vec<(usize, usize)>,
    pub triples: Vec<(usize, usize, usize)>,
    pub pair_index: HashMap<(usize, usize), usize>,
    pub triple_index: HashMap<(usize, usize, usize), usize>,
}

pub(crate) fn simplices(g: &RelGraph) -> Simplices {
    let pairs = g.related_pairs();
    let mut triples = Vec::new();
    for u in 0..g.vertex_count() {
        for &v in g.neighbours(u) {
            for &w in g.neighbours(v) {
                if g.related(u, w) {
                    triples.push((u, v, w));
                }
            }
        }
    }
    let pair_index = pairs.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let triple_index = triples.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    Simplices { pairs, triples, pair_index, triple_index }
}

/// The augmented complex `ℤ → ℤ^V → ℤ^{V^{~2}} → ℤ^{V^{~3}}` of a relation
/// graph: pairs are related ordered pairs, triples are pairwise related
/// ordered triples, and the augmentation is the constant map.
pub fn graph_cech_complex(g: &RelGraph) -> ChainComplexZ {
    let s = simplices(g);
    let n = g.vertex_count();
    let mut d0 = IntMatrix::zeros(s.pairs.len(), n);
    for (row, &(u, v)) in s.pairs.iter().enumerate() {
        bump(&mut d0, row, v, 1);
        bump(&mut d0, row, u, -1);
    }
    let mut d1 = IntMatrix::zeros(s.triples.len(), s.pairs.len());
    for (row, &(u, v, w)) in s.triples.iter().enumerate() {
        bump(&mut d1, row, s.pair_index[&(v, w)], 1);
        bump(&mut d1, row, s.pair_index[&(u, w)], -1);
        bump(&mut d1, row, s.pair_index[&(u, v)], 1);
    }
    let aug = IntMatrix::from_fn(n, 1, |_, _| BigInt::one());
    let labels = [
        (0..n).map(|v| v.to_string()).collect(),
        s.pairs.iter().map(|(u, v)| format!("({u},{v})")).collect(),
        s.triples.iter().map(|(u, v, w)| format!("({u},{v},{w})")).collect(),
    ];
    ChainComplexZ::new(Some(aug), d0, d1, labels).expect("graph complexes satisfy d1·d0 = 0 and d0·aug = 0")
}

/// Pullback of cochains along a graph map, one matrix per degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainMap {
    pub f0: IntMatrix,
    pub f1: IntMatrix,
    pub f2: IntMatrix,
}

impl CochainMap {
    /// Whether `self` is a map of complexes from `a` to `b`.
    pub fn commutes(&self, a: &ChainComplexZ, b: &ChainComplexZ) -> Result<bool, HomologyError> {
        let aug_ok = match (&a.aug, &b.aug) {
            (Some(x), Some(y)) => self.f0.mul(x)? == *y,
            (None, None) => true,
            _ => false,
        };
        Ok(aug_ok && b.d0.mul(&self.f0)? == self.f1.mul(&a.d0)? && b.d1.mul(&self.f1)? == self.f2.mul(&a.d1)?)
    }

    pub fn then(&self, next: &CochainMap) -> Result<CochainMap, HomologyError> {
        Ok(CochainMap { f0: next.f0.mul(&self.f0)?, f1: next.f1.mul(&self.f1)?, f2: next.f2.mul(&self.f2)? })
    }
}

/// Cochains on `target` pulled back along `phi`, a vertex map from `source`
/// to `target`: `(φ*α)(v) = α(φ v)` and likewise on pairs and triples.
pub fn induced_cochain_map(target: &RelGraph, source: &RelGraph, phi: &[usize]) -> Result<CochainMap, HomologyError> {
    if !source.preserves(phi, target) {
        return Err(HomologyError::RelationNotPreserved);
    }
    let (st, ss) = (simplices(target), simplices(source));
    let mut f0 = IntMatrix::zeros(source.vertex_count(), target.vertex_count());
    for (v, &pv) in phi.iter().enumerate() {
        f0.set(v, pv, 1);
    }
    let mut f1 = IntMatrix::zeros(ss.pairs.len(), st.pairs.len());
    for (row, &(u, v)) in ss.pairs.iter().enumerate() {
        f1.set(row, st.pair_index[&(phi[u], phi[v])], 1);
    }
    let mut f2 = IntMatrix::zeros(ss.triples.len(), st.triples.len());
    for (row, &(u, v, w)) in ss.triples.iter().enumerate() {
        f2.set(row, st.triple_index[&(phi[u], phi[v], phi[w])], 1);
    }
    let map = CochainMap { f0, f1, f2 };
    if !map.commutes(&graph_cech_complex(target), &graph_cech_complex(source))? {
        return Err(HomologyError::InvariantViolated("pullback does not commute with the differentials".into()));
    }
    Ok(map)
}
