use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Dyadic, IntervalError};

/// A finite binary word; leading zeros are significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    bits: Vec<bool>,
}

impl BitWord {
    pub fn new(bits: Vec<bool>) -> BitWord {
        BitWord { bits }
    }

    pub fn empty() -> BitWord {
        BitWord { bits: Vec::new() }
    }

    /// The length-`n` word whose integer value is `k`.
    pub fn from_index(k: u64, n: usize) -> BitWord {
        BitWord { bits: (0..n).map(|i| n - 1 - i < 64 && (k >> (n - 1 - i)) & 1 == 1).collect() }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// `Σ bits(i)·2^{n-1-i}`.
    pub fn value(&self) -> BigInt {
        self.bits.iter().fold(BigInt::zero(), |acc, &b| (acc << 1) + if b { 1 } else { 0 })
    }

    /// The value as a machine integer, for words of at most 64 bits.
    pub fn index(&self) -> Option<u64> {
        (self.len() <= 64).then(|| self.bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64))
    }

    pub fn push(&mut self, b: bool) {
        self.bits.push(b);
    }

    pub fn prefix(&self, n: usize) -> BitWord {
        BitWord { bits: self.bits[..n.min(self.len())].to_vec() }
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.bits.iter().try_for_each(|&b| f.write_str(if b { "1" } else { "0" }))
    }
}

impl FromStr for BitWord {
    type Err = IntervalError;

    fn from_str(s: &str) -> Result<BitWord, IntervalError> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(IntervalError::Parse(format!("`{s}` is not a word over 0 and 1"))),
            })
            .collect::<Result<_, _>>()
            .map(BitWord::new)
    }
}

/// `cs_n(w) = Σ_{i<n} w(i) / 2^{i+1}`, that is `k / 2^n`.
pub fn cs_value(w: &BitWord) -> Dyadic {
    Dyadic::new(w.value(), w.len() as u32)
}

fn check_lengths(s: &BitWord, t: &BitWord) -> Result<(), IntervalError> {
    if s.len() != t.len() {
        return Err(IntervalError::LengthMismatch { left: s.len(), right: t.len() });
    }
    Ok(())
}

/// `s ~_n t`: the integer values differ by at most one.
pub fn near(s: &BitWord, t: &BitWord) -> Result<bool, IntervalError> {
    check_lengths(s, t)?;
    let d = s.value() - t.value();
    Ok(d >= -BigInt::one() && d <= BigInt::one())
}

/// A word `u` such that `s` and `t` are both among the length-`n`
/// truncations of `u·0·1̄` and `u·1·0̄`.
pub fn near_companion_witness(s: &BitWord, t: &BitWord) -> Result<Option<BitWord>, IntervalError> {
    check_lengths(s, t)?;
    let n = s.len();
    if n > 63 {
        return Err(IntervalError::Invalid("words longer than 63 bits".into()));
    }
    let (ks, kt) = (s.index().expect("checked length"), t.index().expect("checked length"));
    for m in (0..=n).rev() {
        for u in 0..1u64 << m {
            let (a, b) = if m == n {
                (u, u)
            } else {
                let shift = n - m;
                let base = u << shift;
                (base | ((1u64 << (shift - 1)) - 1), base | (1u64 << (shift - 1)))
            };
            if (ks == a || ks == b) && (kt == a || kt == b) {
                return Ok(Some(BitWord::from_index(u, m)));
            }
        }
    }
    Ok(None)
}

/// `s ~_n t` by exhaustive search for a witness word.
pub fn near_companion(s: &BitWord, t: &BitWord) -> Result<bool, IntervalError> {
    Ok(near_companion_witness(s, t)?.is_some())
}

/// An eventually constant infinite word `prefix · tail · tail · ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Expansion {
    pub prefix: BitWord,
    pub tail: bool,
}

impl Expansion {
    /// The first `m` bits.
    pub fn truncate(&self, m: usize) -> BitWord {
        let mut w = self.prefix.prefix(m);
        while w.len() < m {
            w.push(self.tail);
        }
        w
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.prefix, if self.tail { 1 } else { 0 })
    }
}

/// The binary expansions of a dyadic point of `[0, 1]`: two for interior
/// points `k/2^n`, one for 0 and for 1.
pub fn cs_fiber(d: &Dyadic) -> Result<Vec<Expansion>, IntervalError> {
    if !d.in_unit_interval() {
        return Err(IntervalError::OutOfRange(d.clone()));
    }
    if d.is_zero() {
        return Ok(vec![Expansion { prefix: BitWord::empty(), tail: false }]);
    }
    if *d == Dyadic::one() {
        return Ok(vec![Expansion { prefix: BitWord::empty(), tail: true }]);
    }
    let n = d.exp() as usize;
    let k = d.num();
    let word = |v: &BigInt| {
        BitWord::new((0..n).map(|i| v.bit((n - 1 - i) as u64)).collect())
    };
    Ok(vec![
        Expansion { prefix: word(k), tail: false },
        Expansion { prefix: word(&(k - 1)), tail: true },
    ])
}
