use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// The exact rational `num / 2^exp`, kept with an odd numerator unless the
/// exponent is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: impl Into<BigInt>, exp: u32) -> Dyadic {
        let mut num = num.into();
        let mut exp = exp;
        if num.is_zero() {
            exp = 0;
        }
        while exp > 0 && num.is_even() {
            num >>= 1;
            exp -= 1;
        }
        Dyadic { num, exp }
    }

    pub fn zero() -> Dyadic {
        Dyadic::new(0, 0)
    }

    pub fn one() -> Dyadic {
        Dyadic::new(1, 0)
    }

    /// `1 / 2^n`.
    pub fn unit(n: u32) -> Dyadic {
        Dyadic::new(1, n)
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn exp(&self) -> u32 {
        self.exp
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic { num: self.num.abs(), exp: self.exp }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The numerator over `2^n`, if `n` is at least the exponent.
    pub fn scaled_to(&self, n: u32) -> Option<BigInt> {
        (n >= self.exp).then(|| &self.num << (n - self.exp))
    }

    pub fn in_unit_interval(&self) -> bool {
        !self.num.is_negative() && *self <= Dyadic::one()
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let e = self.exp.max(rhs.exp);
        Dyadic::new((&self.num << (e - self.exp)) + (&rhs.num << (e - rhs.exp)), e)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic { num: -&self.num, exp: self.exp }
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Dyadic) -> Ordering {
        let e = self.exp.max(other.exp);
        (&self.num << (e - self.exp)).cmp(&(&other.num << (e - other.exp)))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Dyadic) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("`{0}` is not a dyadic rational (expected k, k/2^n or k/m with m a power of two)")]
pub struct DyadicParseError(pub String);

impl FromStr for Dyadic {
    type Err = DyadicParseError;

    fn from_str(s: &str) -> Result<Dyadic, DyadicParseError> {
        let err = || DyadicParseError(s.to_string());
        let s = s.trim();
        let Some((num, den)) = s.split_once('/') else {
            return BigInt::from_str(s).map(|n| Dyadic::new(n, 0)).map_err(|_| err());
        };
        let num = BigInt::from_str(num.trim()).map_err(|_| err())?;
        let den = den.trim();
        let exp = if let Some(e) = den.strip_prefix("2^") {
            e.parse::<u32>().map_err(|_| err())?
        } else {
            let d = BigInt::from_str(den).map_err(|_| err())?;
            if !d.is_positive() || !(&d & (&d - BigInt::one())).is_zero() {
                return Err(err());
            }
            (d.bits() - 1) as u32
        };
        Ok(Dyadic::new(num, exp))
    }
}
