//! Algebra signatures: Cl(p,q) with p generators squaring to +1 and q to −1.

use std::fmt;

use thiserror::Error;

/// Largest supported dimension. The closed-form solver only needs n ≤ 3;
/// the product and the center search go up to 6.
pub const MAX_DIMENSION: u32 = 6;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum SignatureError {
    #[error("Cl({p},{q}) is out of range: p+q must lie in 1..={MAX_DIMENSION}")]
    DimensionOutOfRange { p: u32, q: u32 },
}

/// The pair (p,q) fixing the generator squares of Cl(p,q).
///
/// Degenerate (null) generators are not representable: construction admits
/// only p ≥ 0, q ≥ 0 with 1 ≤ p+q ≤ [`MAX_DIMENSION`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    pub fn new(p: u32, q: u32) -> Result<Self, SignatureError> {
        let n = p + q;
        if n == 0 || n > MAX_DIMENSION {
            return Err(SignatureError::DimensionOutOfRange { p, q });
        }
        Ok(Self {
            p: p as u8,
            q: q as u8,
        })
    }

    pub fn p(&self) -> u32 {
        self.p as u32
    }

    pub fn q(&self) -> u32 {
        self.q as u32
    }

    /// Total dimension n = p + q.
    pub fn n(&self) -> u32 {
        (self.p + self.q) as u32
    }

    /// Number of canonical basis blades, 2ⁿ.
    pub fn blade_count(&self) -> usize {
        1usize << self.n()
    }

    /// Square of generator eᵢ (1-indexed): +1 for i ≤ p, −1 otherwise.
    pub fn generator_square(&self, i: u32) -> i32 {
        debug_assert!(i >= 1 && i <= self.n());
        if i <= self.p() {
            1
        } else {
            -1
        }
    }

    /// Blade masks of the n generators, ascending.
    pub fn generator_masks(&self) -> impl Iterator<Item = usize> {
        (0..self.n()).map(|k| 1usize << k)
    }

    /// All blade masks in ascending (canonical) order.
    pub fn blade_masks(&self) -> impl Iterator<Item = usize> {
        0..self.blade_count()
    }

    /// Mask of the top-grade blade e₁…eₙ.
    pub fn pseudoscalar_mask(&self) -> usize {
        self.blade_count() - 1
    }

    /// All signatures of a given dimension, ordered by descending p.
    pub fn all_with_dimension(n: u32) -> Vec<Signature> {
        (0..=n)
            .rev()
            .filter_map(|p| Signature::new(p, n - p).ok())
            .collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}
