//! Normal forms in the finite truncations of B∞.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{spectrum, BoolAlgError, ElementVec, FinBoolAlg, Presentation, Term};
use crate::cap::Cap;

/// Every element of B∞ is either a finite join of generators or a finite
/// meet of negated generators, and not both.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NormalFormBInfty {
    Join(BTreeSet<usize>),
    MeetNeg(BTreeSet<usize>),
}

impl NormalFormBInfty {
    pub fn to_term(&self) -> Term {
        match self {
            NormalFormBInfty::Join(ix) => Term::join_all(ix.iter().map(|i| Term::gen(format!("g{i}")))),
            NormalFormBInfty::MeetNeg(ix) => {
                Term::meet_all(ix.iter().map(|i| Term::not(Term::gen(format!("g{i}")))))
            }
        }
    }

    pub fn indices(&self) -> &BTreeSet<usize> {
        match self {
            NormalFormBInfty::Join(ix) | NormalFormBInfty::MeetNeg(ix) => ix,
        }
    }
}

impl fmt::Display for NormalFormBInfty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |ix: &BTreeSet<usize>| ix.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        match self {
            NormalFormBInfty::Join(ix) => write!(f, "Join({{{}}})", list(ix)),
            NormalFormBInfty::MeetNeg(ix) => write!(f, "MeetNeg({{{}}})", list(ix)),
        }
    }
}

/// Spectrum of `binfty(n)`: the all-zero point and the `n` one-hot points.
pub fn binfty_spectrum(n: usize, cap: Cap) -> Result<FinBoolAlg, BoolAlgError> {
    spectrum(&Presentation::binfty(n), cap)
}

/// Index of the all-zero point of `binfty(n)`'s spectrum.
pub fn binfty_zero_point(a: &FinBoolAlg) -> usize {
    a.find_mask(0).expect("the all-zero assignment is a point of binfty(n)")
}

/// Index of the point of `binfty(n)`'s spectrum with `g_i = 1`.
pub fn binfty_one_hot(a: &FinBoolAlg, i: usize) -> usize {
    let n = a.gen_count();
    a.find_mask(1u64 << (n - 1 - i)).expect("one-hot assignments are points of binfty(n)")
}

/// Classifies an element of `binfty(n)`: a meet of negations when it
/// contains the all-zero point, a join of generators otherwise.
pub fn binfty_normal_form(v: &ElementVec, n: usize, cap: Cap) -> Result<NormalFormBInfty, BoolAlgError> {
    let a = binfty_spectrum(n, cap)?;
    a.check_len(v)?;
    let zero = binfty_zero_point(&a);
    Ok(if v.bits[zero] {
        NormalFormBInfty::MeetNeg((0..n).filter(|&i| !v.bits[binfty_one_hot(&a, i)]).collect())
    } else {
        NormalFormBInfty::Join((0..n).filter(|&i| v.bits[binfty_one_hot(&a, i)]).collect())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Vector over binfty(2) given in the point order 00, 10, 01.
    fn natural_order(bits: [bool; 3]) -> ElementVec {
        let a = binfty_spectrum(2, Cap::default()).unwrap();
        let mut v = a.zero();
        for (pos, s) in ["00", "10", "01"].iter().enumerate() {
            v.bits[a.find_bitstring(s).unwrap()] = bits[pos];
        }
        v
    }

    #[test]
    fn zero_is_empty_join() {
        let nf = binfty_normal_form(&ElementVec::zeros(3), 2, Cap::default()).unwrap();
        assert_eq!(nf, NormalFormBInfty::Join(BTreeSet::new()));
        assert_eq!(nf.to_term(), Term::Zero);
    }

    #[test]
    fn negated_generator() {
        let v = natural_order([true, false, true]);
        let nf = binfty_normal_form(&v, 2, Cap::default()).unwrap();
        assert_eq!(nf, NormalFormBInfty::MeetNeg([0].into()));
        let a = binfty_spectrum(2, Cap::default()).unwrap();
        assert_eq!(a.evaluate(&Term::not(Term::gen("g0"))).unwrap(), v);
    }

    #[test]
    fn join_of_both_generators() {
        let v = natural_order([false, true, true]);
        let nf = binfty_normal_form(&v, 2, Cap::default()).unwrap();
        assert_eq!(nf, NormalFormBInfty::Join([0, 1].into()));
        assert_eq!(nf.to_string(), "Join({0,1})");
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(
            binfty_normal_form(&ElementVec::zeros(4), 2, Cap::default()),
            Err(BoolAlgError::DimensionMismatch { expected: 3, found: 4 })
        ));
    }
}
