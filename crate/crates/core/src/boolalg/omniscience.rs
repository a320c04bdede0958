//! Finite-stage content of the omniscience results: the refutation of any
//! candidate WLPO decider, the join search behind Markov's principle, and
//! the LLPO splitting map on B∞.
//!
//! LLPO is phrased for sequences hitting 1 at most once. A general binary
//! sequence is first replaced by the sequence that is 1 exactly at its first
//! 1 (see [`first_one_sequence`]), which lies in ℕ∞.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::binfty::{binfty_one_hot, binfty_zero_point};
use super::{
    analyze_morphism, hom, product_pair, spectrum, BoolAlgError, Morphism, Presentation, ProductSpectrum, Side,
    Term,
};
use crate::cap::Cap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WlpoVerdict {
    /// `c(β) = 1` although β is the all-zero sequence.
    FailsOnBeta,
    /// `c(γ) = c(β) = 0` although γ is not all-zero.
    FailsOnGamma,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WlpoReport {
    /// Largest generator index occurring in the candidate, if any.
    pub max_index: Option<usize>,
    /// All-zero assignment on `g0..g{k+1}`.
    pub beta: Vec<bool>,
    /// Zero on `g0..gk`, one at `g{k+1}`.
    pub gamma: Vec<bool>,
    pub c_beta: bool,
    pub c_gamma: bool,
    pub verdict: WlpoVerdict,
}

/// Parses a generator name of the form `g<index>`.
pub fn generator_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('g')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

/// Refutes `c` as a decider of "α is identically zero": the sequences β
/// (all zero) and γ (first one just past the generators of `c`) agree on
/// every generator `c` mentions, so `c` cannot separate them.
pub fn wlpo_counterexample(c: &Term) -> Result<WlpoReport, BoolAlgError> {
    let mut max_index: Option<usize> = None;
    for g in c.generators() {
        let i = generator_index(g).ok_or_else(|| BoolAlgError::UnknownGenerator(g.to_string()))?;
        max_index = Some(max_index.map_or(i, |m| m.max(i)));
    }
    let len = max_index.map_or(1, |k| k + 2);
    let beta = vec![false; len];
    let mut gamma = vec![false; len];
    gamma[len - 1] = true;
    let eval = |seq: &[bool]| {
        c.eval_with(&|g: &str| generator_index(g).and_then(|i| seq.get(i).copied()))
            .expect("every generator index is at most max_index")
    };
    let c_beta = eval(&beta);
    let c_gamma = eval(&gamma);
    let verdict = if c_beta { WlpoVerdict::FailsOnBeta } else { WlpoVerdict::FailsOnGamma };
    Ok(WlpoReport { max_index, beta, gamma, c_beta, c_gamma, verdict })
}

/// Least `k ≤ bound` such that `p` quotiented by `rels[0..=k]` is trivial,
/// i.e. the join of `rels[0..=k]` is 1 in `p`.
pub fn minimal_join_witness(
    p: &Presentation,
    rels: &[Term],
    bound: usize,
    cap: Cap,
) -> Result<Option<usize>, BoolAlgError> {
    for r in rels {
        p.check_term(r)?;
    }
    let a = spectrum(p, cap)?;
    let mut alive: Vec<usize> = (0..a.len()).collect();
    for (k, r) in rels.iter().enumerate().take(bound.saturating_add(1)) {
        let c = a.compile(r)?;
        let n = a.gen_count();
        alive.retain(|&i| {
            let mask = a.point_mask(i);
            !c.eval(|g| super::algebra::mask_bit(mask, n, g))
        });
        if alive.is_empty() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// The sequence that is 1 exactly at the first 1 of `alpha`.
pub fn first_one_sequence(alpha: &[bool]) -> Vec<bool> {
    let first = alpha.iter().position(|b| *b);
    (0..alpha.len()).map(|i| Some(i) == first).collect()
}

/// Markov's principle on a finite prefix: if `alpha` is not all zero, find
/// the join witness `k` for the quotient `2/(α'_0, α'_1, ...)` and extract
/// the unique index `n ≤ k` with `α'_n = 1`.
pub fn markov_index(alpha: &[bool]) -> Result<Option<usize>, BoolAlgError> {
    let primed = first_one_sequence(alpha);
    let rels: Vec<Term> = primed.iter().map(|&b| if b { Term::One } else { Term::Zero }).collect();
    let Some(k) = minimal_join_witness(&Presentation::two(), &rels, usize::MAX, Cap::default())? else {
        return Ok(None);
    };
    let mut hits = (0..=k).filter(|&i| primed[i]);
    let n = hits.next();
    debug_assert!(hits.next().is_none());
    Ok(n)
}

/// The LLPO map `binfty(2n) → binfty(n) × binfty(n)`: `g_{2k} ↦ (g_k, 0)`
/// and `g_{2k+1} ↦ (0, g_k)`.
pub fn llpo_map(n: usize, cap: Cap) -> Result<Morphism, BoolAlgError> {
    let half = Presentation::binfty(n);
    let images: BTreeMap<String, Term> = (0..2 * n)
        .map(|m| {
            let g = Term::gen(format!("g{}", m / 2));
            let image = if m % 2 == 0 {
                product_pair(&g, &Term::Zero)
            } else {
                product_pair(&Term::Zero, &g)
            };
            (format!("g{m}"), image)
        })
        .collect();
    hom(&Presentation::binfty(2 * n), &images, &half.product(&half), cap)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decoded {
    /// Point of `Sp(binfty(2n))`.
    pub alpha: usize,
    pub side: Side,
    /// Point of `Sp(binfty(n))` in the chosen copy.
    pub beta: usize,
    /// The corresponding point of the product's spectrum.
    pub preimage: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LlpoReport {
    pub stage: usize,
    pub injective: bool,
    /// Dual map from the product's spectrum onto `Sp(binfty(2n))`.
    pub spectrum_map: Vec<usize>,
    pub surjective: bool,
    pub decode: Vec<Decoded>,
    /// `spectrum_map[decode(α).preimage] = α` for every α.
    pub decode_is_section: bool,
    /// Left-decoded points vanish on odd generators, right-decoded points on
    /// even generators.
    pub identities_hold: bool,
    pub source_points: Vec<String>,
    pub product_points: Vec<String>,
}

/// Builds the stage-`n` LLPO map and checks injectivity, surjectivity of
/// the dual map and the decoding of every point. The all-zero point decodes
/// to the left copy.
pub fn llpo_split(n: usize, cap: Cap) -> Result<LlpoReport, BoolAlgError> {
    if n == 0 {
        return Err(BoolAlgError::Invalid("llpo stage must be at least 1".into()));
    }
    let f = llpo_map(n, cap)?;
    let report = analyze_morphism(&f)?;
    let half = Presentation::binfty(n);
    let prod = ProductSpectrum::new(&half, &half, cap)?;
    let src = f.src();
    debug_assert_eq!(prod.algebra.point_masks(), f.dst().point_masks());

    let mut decode = Vec::with_capacity(src.len());
    let mut identities_hold = true;
    let mut decode_is_section = true;
    for alpha in 0..src.len() {
        let support = (0..2 * n).find(|&m| src.value(alpha, m));
        let (side, beta) = match support {
            None => (Side::Left, binfty_zero_point(&prod.left)),
            Some(m) if m % 2 == 0 => (Side::Left, binfty_one_hot(&prod.left, m / 2)),
            Some(m) => (Side::Right, binfty_one_hot(&prod.right, m / 2)),
        };
        let preimage = prod.inject(side, beta).expect("every factor point lies in the product");
        decode_is_section &= report.point_map[preimage] == alpha;
        let parity = match side {
            Side::Left => 1,
            Side::Right => 0,
        };
        identities_hold &= (0..2 * n).filter(|m| m % 2 == parity).all(|m| !src.value(alpha, m));
        decode.push(Decoded { alpha, side, beta, preimage });
    }

    Ok(LlpoReport {
        stage: n,
        injective: report.injective,
        surjective: report.point_map_surjective,
        spectrum_map: report.point_map,
        decode,
        decode_is_section,
        identities_hold,
        source_points: (0..src.len()).map(|i| src.point_bitstring(i)).collect(),
        product_points: prod
            .components
            .iter()
            .map(|&(side, i)| {
                let factor = if side == Side::Left { &prod.left } else { &prod.right };
                format!("{side:?}:{}", factor.point_bitstring(i))
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wlpo_on_join_of_two_generators() {
        let c = Term::or(Term::gen("g0"), Term::gen("g1"));
        let r = wlpo_counterexample(&c).unwrap();
        assert_eq!(r.max_index, Some(1));
        assert_eq!(r.beta, vec![false; 3]);
        assert_eq!(r.gamma, vec![false, false, true]);
        assert!(!r.c_beta && !r.c_gamma);
        assert_eq!(r.verdict, WlpoVerdict::FailsOnGamma);
    }

    #[test]
    fn wlpo_on_constants_and_single_generator() {
        let r = wlpo_counterexample(&Term::One).unwrap();
        assert!(r.c_beta);
        assert_eq!(r.verdict, WlpoVerdict::FailsOnBeta);
        let r = wlpo_counterexample(&Term::gen("g0")).unwrap();
        assert_eq!(r.max_index, Some(0));
        assert!(!r.c_beta && !r.c_gamma);
        assert_eq!(r.verdict, WlpoVerdict::FailsOnGamma);
        assert!(wlpo_counterexample(&Term::gen("x")).is_err());
    }

    #[test]
    fn join_witness_examples() {
        let two = Presentation::two();
        assert_eq!(minimal_join_witness(&two, &[Term::One], 5, Cap::default()).unwrap(), Some(0));
        let free = Presentation::cantor(1);
        let g0 = Term::gen("g0");
        let rels = [g0.clone(), Term::not(g0.clone()), g0];
        assert_eq!(minimal_join_witness(&free, &rels, 5, Cap::default()).unwrap(), Some(1));
        assert_eq!(minimal_join_witness(&free, &rels, 0, Cap::default()).unwrap(), None);
        let zeros = vec![Term::Zero; 11];
        assert_eq!(minimal_join_witness(&free, &zeros, 10, Cap::default()).unwrap(), None);
    }

    #[test]
    fn markov_finds_first_one() {
        assert_eq!(markov_index(&[false, false, true, true, false]).unwrap(), Some(2));
        assert_eq!(markov_index(&[false; 6]).unwrap(), None);
        assert_eq!(first_one_sequence(&[false, true, true]), vec![false, true, false]);
    }

    #[test]
    fn llpo_stage_one() {
        let r = llpo_split(1, Cap::default()).unwrap();
        assert!(r.injective && r.surjective && r.decode_is_section && r.identities_hold);
        assert_eq!(r.spectrum_map.len(), 4);
        assert_eq!(r.source_points.len(), 3);
    }

    #[test]
    fn llpo_decodes_odd_one_hot_to_right() {
        let r = llpo_split(2, Cap::default()).unwrap();
        let src = binfty_spectrum_for_test(4);
        let alpha = binfty_one_hot(&src, 1);
        let d = &r.decode[alpha];
        assert_eq!(d.side, Side::Right);
        let half = binfty_spectrum_for_test(2);
        assert_eq!(d.beta, binfty_one_hot(&half, 0));
    }

    fn binfty_spectrum_for_test(n: usize) -> crate::boolalg::FinBoolAlg {
        spectrum(&Presentation::binfty(n), Cap::default()).unwrap()
    }

    #[test]
    fn llpo_stage_zero_rejected() {
        assert!(llpo_split(0, Cap::default()).is_err());
    }
}
