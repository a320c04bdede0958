use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::algebra::mask_bit;
use super::{spectrum, BoolAlgError, FinBoolAlg, Presentation};
use crate::cap::Cap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// Spectrum of a product presentation together with its identification
/// with the disjoint union of the factors' spectra.
#[derive(Debug, Clone)]
pub struct ProductSpectrum {
    pub algebra: FinBoolAlg,
    pub left: FinBoolAlg,
    pub right: FinBoolAlg,
    /// For each product point, the factor it lies in and its index there.
    pub components: Vec<(Side, usize)>,
    index: HashMap<(Side, usize), usize>,
}

impl ProductSpectrum {
    pub fn new(left: &Presentation, right: &Presentation, cap: Cap) -> Result<ProductSpectrum, BoolAlgError> {
        let algebra = spectrum(&left.product(right), cap)?;
        let left_alg = spectrum(left, cap)?;
        let right_alg = spectrum(right, cap)?;
        let n = algebra.gen_count();
        let nl = left.gens().len();
        let nr = right.gens().len();
        let extract = |mask: u64, offset: usize, width: usize| {
            (0..width).fold(0u64, |acc, g| (acc << 1) | mask_bit(mask, n, offset + g) as u64)
        };
        let components: Vec<(Side, usize)> = algebra
            .point_masks()
            .iter()
            .map(|&mask| {
                if mask_bit(mask, n, 0) {
                    let i = left_alg.find_mask(extract(mask, 1, nl));
                    (Side::Left, i.expect("left component satisfies the left relations"))
                } else {
                    let i = right_alg.find_mask(extract(mask, 1 + nl, nr));
                    (Side::Right, i.expect("right component satisfies the right relations"))
                }
            })
            .collect();
        let index = components.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        Ok(ProductSpectrum { algebra, left: left_alg, right: right_alg, components, index })
    }

    /// The product point corresponding to a point of one factor.
    pub fn inject(&self, side: Side, i: usize) -> Option<usize> {
        self.index.get(&(side, i)).copied()
    }
}
