use std::collections::BTreeSet;

use super::{minimal_join_witness, spectrum, BoolAlgError, ElementVec, Presentation, Term};
use crate::cap::Cap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    /// The decidable subset: 1 at points where the chosen `g_j` join is 1.
    pub d: ElementVec,
    /// Indices of the `f_i` used in the covering join.
    pub used_f: BTreeSet<usize>,
    /// Indices of the `g_j` used in the covering join.
    pub used_g: BTreeSet<usize>,
    /// The join `⋁_J g_j` whose evaluation is `d`.
    pub witness: Term,
}

/// Separates the closed sets `F = {x : x(f_i) = 0 ∀i}` and
/// `G = {x : x(g_j) = 0 ∀j}` by a decidable subset `D ⊇ F` disjoint from `G`.
///
/// The lists are interleaved `f0, g0, f1, g1, ...` (the shorter one padded
/// with 0) and the first prefix whose join is 1 fixes the finite index sets.
pub fn separate_closed(p: &Presentation, fs: &[Term], gs: &[Term], cap: Cap) -> Result<Separation, BoolAlgError> {
    let len = fs.len().max(gs.len());
    let mut h = Vec::with_capacity(2 * len);
    for i in 0..len {
        h.push(fs.get(i).cloned().unwrap_or(Term::Zero));
        h.push(gs.get(i).cloned().unwrap_or(Term::Zero));
    }
    let k = match h.len() {
        0 => None,
        n => minimal_join_witness(p, &h, n - 1, cap)?,
    };
    let k = k.ok_or(BoolAlgError::NotDisjoint)?;
    let used_f: BTreeSet<usize> = (0..=k).filter(|m| m % 2 == 0 && m / 2 < fs.len()).map(|m| m / 2).collect();
    let used_g: BTreeSet<usize> = (0..=k).filter(|m| m % 2 == 1 && m / 2 < gs.len()).map(|m| m / 2).collect();
    let witness = Term::join_all(used_g.iter().map(|&j| gs[j].clone()));
    let d = spectrum(p, cap)?.evaluate(&witness)?;
    Ok(Separation { d, used_f, used_g, witness })
}
