use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{graph_cech_complex, homology, induced_cochain_map, invariant_factors, kernel_basis, rank};
use super::{AbInvariants, HomologyError};
use crate::cap::Cap;
use crate::interval::{circle_graph, interval_graph};
use crate::profinite::{RelGraph, RelGraphTower};

/// Cohomology of one level of a graph tower.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub level: usize,
    /// `[1, c0, c1, c2]` for the augmented complex.
    pub dims: Vec<usize>,
    pub h0: AbInvariants,
    pub h1: AbInvariants,
    /// Exactness at `ℤ`, at `C0` and at `C1`.
    pub exact: Vec<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl CohomologyReport {
    pub fn fully_exact(&self) -> bool {
        self.exact.iter().all(|b| *b)
    }
}

pub fn graph_cohomology(g: &RelGraph, level: usize) -> CohomologyReport {
    let c = graph_cech_complex(g);
    let h = homology(&c);
    CohomologyReport { level, dims: c.dim_list(), h0: h.h0, h1: h.h1, exact: h.exact, warnings: h.warnings }
}

pub fn interval_cohomology(n: usize, cap: Cap) -> Result<CohomologyReport, HomologyError> {
    Ok(graph_cohomology(&interval_graph(n, cap)?, n))
}

pub fn circle_cohomology(n: usize, cap: Cap) -> Result<CohomologyReport, HomologyError> {
    Ok(graph_cohomology(&circle_graph(n, cap)?, n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizationReport {
    pub levels: Vec<CohomologyReport>,
    /// `h0_iso[n]`: the pullback from level `n` to level `n + 1` is an
    /// isomorphism on `h0`.
    pub h0_iso: Vec<bool>,
    pub h1_iso: Vec<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

fn all_units(factors: &[num_bigint::BigInt]) -> bool {
    factors.iter().all(One::is_one)
}

/// Cohomology of levels `0..=depth` and whether each pullback along the
/// tower's transitions is an isomorphism. Groups with torsion are compared
/// on their free parts only, with a warning.
///
/// On `h0 = ker d0` the pullback is an isomorphism iff the ranks agree and
/// the image of a kernel basis has all invariant factors 1. On `h1` it is
/// one iff the ranks agree and `im d0' + φ*(ker d1)` is a pure sublattice
/// of full rank in `ker d1'`.
pub fn stabilization_report(tower: &RelGraphTower, depth: usize) -> Result<StabilizationReport, HomologyError> {
    if depth >= tower.levels() {
        return Err(HomologyError::Invalid(format!("depth {depth} but only {} levels", tower.levels())));
    }
    let complexes: Vec<_> = (0..=depth).map(|n| graph_cech_complex(tower.level(n))).collect();
    let levels: Vec<CohomologyReport> = (0..=depth).map(|n| graph_cohomology(tower.level(n), n)).collect();
    let mut warnings: Vec<String> = levels.iter().flat_map(|r| r.warnings.iter().cloned()).collect();
    let mut h0_iso = Vec::new();
    let mut h1_iso = Vec::new();
    for n in 0..depth {
        let (a, b) = (&complexes[n], &complexes[n + 1]);
        let f = induced_cochain_map(tower.level(n), tower.level(n + 1), tower.transition(n))?;
        let (ra, rb) = (&levels[n], &levels[n + 1]);

        let k0 = kernel_basis(&a.d0);
        let image0 = f.f0.mul(&k0)?;
        let fac0 = invariant_factors(&image0);
        h0_iso.push(ra.h0.rank == rb.h0.rank && fac0.len() == k0.cols() && all_units(&fac0));

        let k1 = kernel_basis(&a.d1);
        let m = b.d0.hcat(&f.f1.mul(&k1)?)?;
        let fac = invariant_factors(&m);
        let target_rank = b.d0.rows() - rank(&b.d1);
        h1_iso.push(ra.h1.rank == rb.h1.rank && fac.len() == target_rank && all_units(&fac));
        if !ra.h1.torsion.is_empty() || !rb.h1.torsion.is_empty() {
            warnings.push(format!("h1 at levels {n} and {} compared on free parts only", n + 1));
        }
    }
    Ok(StabilizationReport { levels, h0_iso, h1_iso, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::{circle_tower, interval_tower};

    #[test]
    fn small_levels() {
        let c = Cap::default();
        let r = interval_cohomology(1, c).unwrap();
        assert_eq!((r.h0.rank, r.h1.rank), (1, 0));
        assert!(r.fully_exact());
        assert_eq!(interval_cohomology(2, c).unwrap().dims, vec![1, 4, 10, 22]);
        let r = circle_cohomology(1, c).unwrap();
        assert_eq!((r.h0.rank, r.h1.rank), (1, 0));
        let r = circle_cohomology(2, c).unwrap();
        assert_eq!((r.h0.rank, r.h1.rank), (1, 1));
    }

    #[test]
    fn towers_stabilize() {
        let r = stabilization_report(&interval_tower(4, Cap::default()).unwrap(), 4).unwrap();
        assert!(r.h0_iso.iter().all(|b| *b) && r.h1_iso.iter().all(|b| *b));
        let r = stabilization_report(&circle_tower(4, Cap::default()).unwrap(), 4).unwrap();
        assert_eq!(r.h1_iso, vec![true, false, true, true]);
        assert!(r.h0_iso.iter().all(|b| *b));
    }

    #[test]
    fn point_tower() {
        let t = RelGraphTower::new(vec![RelGraph::discrete(1); 3], vec![vec![0]; 2]).unwrap();
        let r = stabilization_report(&t, 2).unwrap();
        assert!(r.h0_iso.iter().chain(&r.h1_iso).all(|b| *b));
    }

    #[test]
    fn json_shape() {
        let r = interval_cohomology(1, Cap::default()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["h0"]["rank"], 1);
        assert_eq!(v["exact"], serde_json::json!([true, true, true]));
        assert!(v.get("warnings").is_none());
    }
}
