//! The enumeration cap shared by every exhaustive operation.

use std::fmt;

/// Environment variable overriding the default cap.
pub const CAP_ENV: &str = "STONEWORK_CAP";

/// Hard ceiling: spectra are stored as 64-bit assignment masks and the
/// bit-parallel enumeration needs `2^cap / 64` words of memory.
pub const MAX_CAP: usize = 32;

/// Upper bound on the number of generators (or the level of a dyadic graph)
/// an operation may enumerate `2^n` objects for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cap(usize);

impl Cap {
    pub const DEFAULT: Cap = Cap(20);

    /// Values above [`MAX_CAP`] are clamped.
    pub fn new(n: usize) -> Cap {
        Cap(n.min(MAX_CAP))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Reads [`CAP_ENV`], falling back to the default when it is unset or
    /// not a number.
    pub fn from_env() -> Cap {
        std::env::var(CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(Cap::new)
            .unwrap_or_default()
    }

    pub fn check(self, needed: usize) -> Result<(), CapExceeded> {
        if needed > self.0 {
            Err(CapExceeded { needed, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Cap {
    fn default() -> Self {
        Cap::DEFAULT
    }
}

impl fmt::Display for Cap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("enumeration size 2^{needed} exceeds the cap 2^{cap}")]
pub struct CapExceeded {
    pub needed: usize,
    pub cap: usize,
}
