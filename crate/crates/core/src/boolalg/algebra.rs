//! Finite Boolean algebras in their canonical form: the list of spectrum
//! points, with elements stored as bit-vectors over those points.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::term::Compiled;
use super::{BoolAlgError, Presentation, Term};
use crate::cap::Cap;

/// Finite Boolean algebra presented by `source`, stored as its spectrum.
///
/// A point is an assignment of bits to the generators, encoded as a mask
/// whose most significant of `n` bits is the first generator. Points are
/// kept in increasing mask order, which is the lexicographic order of the
/// bit-strings `g0 g1 ... g{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinBoolAlg {
    source: Presentation,
    points: Vec<u64>,
}

/// An element of a [`FinBoolAlg`]: one bit per spectrum point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementVec {
    pub bits: Vec<bool>,
}

impl ElementVec {
    pub fn zeros(len: usize) -> ElementVec {
        ElementVec { bits: vec![false; len] }
    }

    pub fn ones(len: usize) -> ElementVec {
        ElementVec { bits: vec![true; len] }
    }

    pub fn singleton(len: usize, i: usize) -> ElementVec {
        let mut v = ElementVec::zeros(len);
        v.bits[i] = true;
        v
    }

    /// The `k`-th vector of length `len` in binary counting order, with
    /// bit `i` of `k` giving entry `i`.
    pub fn from_index(len: usize, k: u64) -> ElementVec {
        ElementVec { bits: (0..len).map(|i| (k >> i) & 1 == 1).collect() }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|b| !b)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }

    pub fn ones_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i)
    }

    pub fn complement(&self) -> ElementVec {
        ElementVec { bits: self.bits.iter().map(|b| !b).collect() }
    }

    /// Renders as a 0/1 string.
    pub fn to_bitstring(&self) -> String {
        self.bits.iter().map(|b| if *b { '1' } else { '0' }).collect()
    }
}

/// Builds the spectrum of a presentation by bit-parallel evaluation of all
/// relations over every assignment.
pub fn spectrum(p: &Presentation, cap: Cap) -> Result<FinBoolAlg, BoolAlgError> {
    let n = p.gens().len();
    cap.check(n)?;
    let index = p.index_map();
    let rels = p
        .rels()
        .iter()
        .map(|r| Compiled::compile(r, &|g| index.get(g).copied()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(BoolAlgError::UnknownGenerator)?;
    let table = TruthTable::killed_by(n, &rels);
    let points = table.zeros().collect();
    Ok(FinBoolAlg { source: p.clone(), points })
}

/// Assignments as bit-sets over the `2^n` assignment indices.
pub(crate) struct TruthTable {
    n: usize,
    words: Vec<u64>,
}

impl TruthTable {
    fn word_count(n: usize) -> usize {
        if n >= 6 {
            1 << (n - 6)
        } else {
            1
        }
    }

    fn valid_mask(n: usize) -> u64 {
        if n >= 6 {
            u64::MAX
        } else {
            (1u64 << (1u64 << n)) - 1
        }
    }

    /// Values of generator `i` over assignment indices `64*block .. 64*block+63`.
    fn var_word(n: usize, i: usize, block: usize) -> u64 {
        const PATTERNS: [u64; 6] = [
            0xAAAA_AAAA_AAAA_AAAA,
            0xCCCC_CCCC_CCCC_CCCC,
            0xF0F0_F0F0_F0F0_F0F0,
            0xFF00_FF00_FF00_FF00,
            0xFFFF_0000_FFFF_0000,
            0xFFFF_FFFF_0000_0000,
        ];
        let shift = n - 1 - i;
        if shift < 6 {
            PATTERNS[shift]
        } else if (block >> (shift - 6)) & 1 == 1 {
            u64::MAX
        } else {
            0
        }
    }

    /// Marks every assignment at which some relation evaluates to 1.
    pub(crate) fn killed_by(n: usize, rels: &[Compiled]) -> TruthTable {
        let words = (0..Self::word_count(n))
            .map(|block| {
                rels.iter()
                    .fold(0u64, |acc, r| acc | r.eval_word(|i| Self::var_word(n, i, block)))
                    & Self::valid_mask(n)
            })
            .collect();
        TruthTable { n, words }
    }

    /// Assignment indices not marked, in increasing order.
    pub(crate) fn zeros(&self) -> impl Iterator<Item = u64> + '_ {
        let valid = Self::valid_mask(self.n);
        self.words.iter().enumerate().flat_map(move |(w, word)| {
            let mut free = !word & valid;
            std::iter::from_fn(move || {
                if free == 0 {
                    return None;
                }
                let bit = free.trailing_zeros() as u64;
                free &= free - 1;
                Some(64 * w as u64 + bit)
            })
        })
    }
}

impl FinBoolAlg {
    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn gen_count(&self) -> usize {
        self.source.gens().len()
    }

    /// Assignment mask of point `i`.
    pub fn point_mask(&self, i: usize) -> u64 {
        self.points[i]
    }

    pub fn point_masks(&self) -> &[u64] {
        &self.points
    }

    /// Value of generator `g` at point `i`.
    pub fn value(&self, i: usize, g: usize) -> bool {
        mask_bit(self.points[i], self.gen_count(), g)
    }

    /// The point as a bit-string in generator order.
    pub fn point_bitstring(&self, i: usize) -> String {
        (0..self.gen_count())
            .map(|g| if self.value(i, g) { '1' } else { '0' })
            .collect()
    }

    /// The point as `(generator, bit)` pairs.
    pub fn assignment(&self, i: usize) -> Vec<(String, bool)> {
        self.source
            .gens()
            .iter()
            .enumerate()
            .map(|(g, name)| (name.clone(), self.value(i, g)))
            .collect()
    }

    /// Index of the point with the given mask, if the mask satisfies the
    /// relations.
    pub fn find_mask(&self, mask: u64) -> Option<usize> {
        self.points.binary_search(&mask).ok()
    }

    /// Index of the point with the given bit-string.
    pub fn find_bitstring(&self, bits: &str) -> Option<usize> {
        if bits.len() != self.gen_count() {
            return None;
        }
        let mut mask = 0u64;
        for c in bits.chars() {
            mask = (mask << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return None,
                };
        }
        self.find_mask(mask)
    }

    pub(crate) fn compile(&self, t: &Term) -> Result<Compiled, BoolAlgError> {
        let index = self.source.index_map();
        Compiled::compile(t, &|g| index.get(g).copied()).map_err(BoolAlgError::UnknownGenerator)
    }

    /// Evaluates a term at every point.
    pub fn evaluate(&self, t: &Term) -> Result<ElementVec, BoolAlgError> {
        let c = self.compile(t)?;
        Ok(self.evaluate_compiled(&c))
    }

    pub(crate) fn evaluate_compiled(&self, c: &Compiled) -> ElementVec {
        let n = self.gen_count();
        ElementVec {
            bits: self
                .points
                .iter()
                .map(|&mask| c.eval(|g| mask_bit(mask, n, g)))
                .collect(),
        }
    }

    /// The full minterm of point `i`: the meet of every generator or its
    /// negation, as the point dictates.
    pub fn minterm(&self, i: usize) -> Term {
        Term::meet_all(self.source.gens().iter().enumerate().map(|(g, name)| {
            if self.value(i, g) {
                Term::gen(name)
            } else {
                Term::not(Term::gen(name))
            }
        }))
    }

    /// A term whose evaluation is `v`: the join of the minterms of the
    /// selected points.
    pub fn realize(&self, v: &ElementVec) -> Result<Term, BoolAlgError> {
        self.check_len(v)?;
        Ok(Term::join_all(v.ones_positions().map(|i| self.minterm(i))))
    }

    pub(crate) fn check_len(&self, v: &ElementVec) -> Result<(), BoolAlgError> {
        if v.len() != self.len() {
            return Err(BoolAlgError::DimensionMismatch { expected: self.len(), found: v.len() });
        }
        Ok(())
    }

    /// `0 = 1` in the algebra, equivalently the spectrum is empty.
    pub fn is_trivial(&self) -> bool {
        self.points.is_empty()
    }

    pub fn zero(&self) -> ElementVec {
        ElementVec::zeros(self.len())
    }

    pub fn one(&self) -> ElementVec {
        ElementVec::ones(self.len())
    }
}

pub(crate) fn mask_bit(mask: u64, n: usize, g: usize) -> bool {
    (mask >> (n - 1 - g)) & 1 == 1
}

/// Outcome of checking that evaluation `B → 2^Sp(B)` is a bijection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityReport {
    pub points: usize,
    /// `log2 |B|`, counted on the algebra side as the atoms of the free
    /// algebra not killed by the relations.
    pub log2_elements: usize,
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
    /// Whether every element of the free algebra was enumerated and
    /// classified modulo the relation ideal.
    pub exhaustive: bool,
}

/// Free algebras up to this many generators are enumerated element by
/// element (`2^(2^4)` elements).
const EXHAUSTIVE_GENS: usize = 4;
/// Spectra up to this many points get every bit-vector realized.
const EXHAUSTIVE_POINTS: usize = 10;
/// Atom checks are capped at this many atoms.
const ATOM_SAMPLE: usize = 4096;

/// Checks finite Stone duality for `p`.
///
/// The algebra is counted independently of the spectrum: an atom of the
/// free algebra (a full minterm) survives the quotient unless it lies below
/// the join `R` of the relations, and two free elements are identified iff
/// their symmetric difference lies below `R`. For small generator counts
/// every free element is enumerated and the classes are compared with the
/// evaluation vectors; otherwise injectivity is checked on surviving atoms
/// and surjectivity by realizing bit-vectors.
pub fn check_duality(p: &Presentation, cap: Cap) -> Result<DualityReport, BoolAlgError> {
    let a = spectrum(p, cap)?;
    let n = p.gens().len();
    let total = 1usize << n;
    let join = a.compile(&Term::join_all(p.rels().iter().cloned()))?;
    let killed: Vec<bool> = (0..total as u64).map(|m| join.eval(|g| mask_bit(m, n, g))).collect();
    let log2_elements = killed.iter().filter(|k| !**k).count();

    if n <= EXHAUSTIVE_GENS {
        let (injective, surjective) = exhaustive_classes(&a, &killed);
        return Ok(DualityReport {
            points: a.len(),
            log2_elements,
            injective,
            surjective: surjective && log2_elements == a.len(),
            bijective: injective && surjective && log2_elements == a.len(),
            exhaustive: true,
        });
    }

    // Surviving atoms must evaluate to distinct singletons.
    let survivors: Vec<u64> = (0..total as u64).filter(|m| !killed[*m as usize]).collect();
    let step = (survivors.len() / ATOM_SAMPLE).max(1);
    let mut injective = survivors.len() == a.len();
    for &m in survivors.iter().step_by(step) {
        let Some(i) = a.find_mask(m) else {
            injective = false;
            break;
        };
        if a.evaluate(&a.minterm(i))? != ElementVec::singleton(a.len(), i) {
            injective = false;
            break;
        }
    }

    let mut surjective = true;
    if a.len() <= EXHAUSTIVE_POINTS {
        for k in 0..(1u64 << a.len()) {
            let v = ElementVec::from_index(a.len(), k);
            if a.evaluate(&a.realize(&v)?)? != v {
                surjective = false;
                break;
            }
        }
    } else {
        let mut probes = vec![a.zero(), a.one()];
        probes.extend((0..a.len()).step_by((a.len() / ATOM_SAMPLE).max(1)).map(|i| ElementVec::singleton(a.len(), i)));
        for v in probes {
            if a.evaluate(&a.realize(&v)?)? != v {
                surjective = false;
                break;
            }
        }
    }
    Ok(DualityReport {
        points: a.len(),
        log2_elements,
        injective,
        surjective,
        bijective: injective && surjective && log2_elements == a.len(),
        exhaustive: false,
    })
}

/// Enumerates all `2^(2^n)` free elements as truth tables, groups them by
/// class modulo the relation ideal and compares with evaluation vectors.
fn exhaustive_classes(a: &FinBoolAlg, killed: &[bool]) -> (bool, bool) {
    let total = killed.len();
    let ideal_top: u64 = killed
        .iter()
        .enumerate()
        .filter(|(_, k)| **k)
        .fold(0, |acc, (m, _)| acc | (1u64 << m));
    let mut class_of_vec: HashMap<Vec<bool>, u64> = HashMap::new();
    let mut vec_of_class: HashMap<u64, Vec<bool>> = HashMap::new();
    let mut well_defined = true;
    let mut injective = true;
    for x in 0..(1u64 << total) {
        // x ≡ y iff x xor y lies below the join of the relations.
        let class = x & !ideal_top;
        let v: Vec<bool> = a.points.iter().map(|&m| (x >> m) & 1 == 1).collect();
        match vec_of_class.get(&class) {
            Some(w) if *w != v => well_defined = false,
            Some(_) => {}
            None => {
                vec_of_class.insert(class, v.clone());
            }
        }
        match class_of_vec.get(&v) {
            Some(c) if *c != class => injective = false,
            Some(_) => {}
            None => {
                class_of_vec.insert(v, class);
            }
        }
    }
    let surjective = class_of_vec.len() == 1usize << a.len();
    (well_defined && injective, surjective)
}
