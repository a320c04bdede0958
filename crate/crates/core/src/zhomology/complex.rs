use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{invariant_factors, HomologyError, IntMatrix};

/// `0 → (ℤ) → C0 → C1 → C2` with cochain vectors as columns; each map acts
/// by left multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplexZ {
    /// `c0 × 1`, when present.
    pub aug: Option<IntMatrix>,
    /// `c1 × c0`.
    pub d0: IntMatrix,
    /// `c2 × c1`.
    pub d1: IntMatrix,
    pub labels: [Vec<String>; 3],
}

impl ChainComplexZ {
    pub fn new(
        aug: Option<IntMatrix>,
        d0: IntMatrix,
        d1: IntMatrix,
        labels: [Vec<String>; 3],
    ) -> Result<ChainComplexZ, HomologyError> {
        let (c0, c1) = (d0.cols(), d0.rows());
        if d1.cols() != c1 {
            return Err(HomologyError::DimensionMismatch(format!("d1 has {} columns, c1 = {c1}", d1.cols())));
        }
        if labels[0].len() != c0 || labels[1].len() != c1 || labels[2].len() != d1.rows() {
            return Err(HomologyError::DimensionMismatch("basis labels do not match dimensions".into()));
        }
        if !d1.mul(&d0)?.is_zero() {
            return Err(HomologyError::InvariantViolated("d1·d0 ≠ 0".into()));
        }
        if let Some(a) = &aug {
            if a.rows() != c0 || a.cols() != 1 {
                return Err(HomologyError::DimensionMismatch("augmentation must be c0 × 1".into()));
            }
            if !d0.mul(a)?.is_zero() {
                return Err(HomologyError::InvariantViolated("d0·aug ≠ 0".into()));
            }
        }
        Ok(ChainComplexZ { aug, d0, d1, labels })
    }

    /// `(c0, c1, c2)`.
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.d0.cols(), self.d0.rows(), self.d1.rows())
    }

    /// `[1, c0, c1, c2]` with the augmentation, `[c0, c1, c2]` without.
    pub fn dim_list(&self) -> Vec<usize> {
        let (c0, c1, c2) = self.dims();
        match self.aug {
            Some(_) => vec![1, c0, c1, c2],
            None => vec![c0, c1, c2],
        }
    }
}

/// A finitely generated abelian group `ℤ^rank ⊕ ⊕ ℤ/d_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbInvariants {
    pub rank: usize,
    #[serde(with = "decimal_list")]
    pub torsion: Vec<BigInt>,
}

mod decimal_list {
    use std::str::FromStr;

    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(BigInt::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| BigInt::from_str(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

impl AbInvariants {
    pub fn free(rank: usize) -> AbInvariants {
        AbInvariants { rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// `ℤ^{free} / D` where `D` has the given invariant factors.
    fn quotient(free: usize, factors: &[BigInt]) -> AbInvariants {
        AbInvariants {
            rank: free - factors.len(),
            torsion: factors.iter().filter(|d| !d.is_one()).cloned().collect(),
        }
    }
}

impl fmt::Display for AbInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("ℤ".to_string()),
            r => parts.push(format!("ℤ^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("ℤ/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Homology {
    /// `ker d0`.
    pub h0: AbInvariants,
    /// `ker d0 / im aug`, when the complex is augmented.
    pub h0_reduced: Option<AbInvariants>,
    /// `ker d1 / im d0`.
    pub h1: AbInvariants,
    /// With an augmentation: exactness at `ℤ`, at `C0` and at `C1`.
    /// Without: vanishing of `h0` and of `h1`.
    pub exact: Vec<bool>,
    pub warnings: Vec<String>,
}

/// Cohomology from ranks and invariant factors. Kernels of integer maps
/// are direct summands, so each torsion part is read off from the
/// invariant factors of the incoming map.
pub fn homology(c: &ChainComplexZ) -> Homology {
    let (c0, c1, _) = c.dims();
    let f0 = invariant_factors(&c.d0);
    let f1 = invariant_factors(&c.d1);
    let h0 = AbInvariants::free(c0 - f0.len());
    let h1 = AbInvariants::quotient(c1 - f1.len(), &f0);
    let (h0_reduced, exact) = match &c.aug {
        Some(a) => {
            let fa = invariant_factors(a);
            let reduced = AbInvariants::quotient(h0.rank, &fa);
            let exact = vec![fa.len() == 1, reduced.is_zero(), h1.is_zero()];
            (Some(reduced), exact)
        }
        None => (None, vec![h0.is_zero(), h1.is_zero()]),
    };
    let mut warnings = Vec::new();
    for (name, g) in [("h0", Some(&h0)), ("h0 reduced", h0_reduced.as_ref()), ("h1", Some(&h1))] {
        if let Some(g) = g.filter(|g| !g.torsion.is_empty()) {
            warnings.push(format!("{name} has torsion {g}"));
        }
    }
    Homology { h0, h0_reduced, h1, exact, warnings }
}
