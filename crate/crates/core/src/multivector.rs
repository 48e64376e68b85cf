//! Dense multivectors over the 2ⁿ canonical blades of Cl(p,q).
//!
//! Storage is a plain coefficient vector indexed by blade mask; at n ≤ 6
//! that is at most 64 entries and sparsity is not worth the bookkeeping.
//! All values are immutable after construction and every operation is a
//! pure function, so multivectors can be shared freely across threads.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::blade::{product_table, BladeIndex};
use crate::scalar::Scalar;
use crate::signature::Signature;

/// Element of Cl(p,q): one coefficient per canonical blade, indexed by mask.
#[derive(Clone, PartialEq, Debug)]
pub struct Multivector<S> {
    sig: Signature,
    coeffs: Vec<S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(sig: Signature) -> Self {
        Self {
            sig,
            coeffs: vec![S::zero(); sig.blade_count()],
        }
    }

    pub fn scalar(sig: Signature, value: S) -> Self {
        let mut mv = Self::zero(sig);
        mv.coeffs[0] = value;
        mv
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, S::one())
    }

    /// The basis blade with the given mask, coefficient one.
    pub fn basis_blade(sig: Signature, mask: usize) -> Self {
        assert!(mask < sig.blade_count(), "blade {mask:#b} out of range for {sig}");
        let mut mv = Self::zero(sig);
        mv.coeffs[mask] = S::one();
        mv
    }

    /// Build from explicit coefficients, one per blade mask.
    pub fn from_coeffs(sig: Signature, coeffs: Vec<S>) -> Self {
        assert_eq!(
            coeffs.len(),
            sig.blade_count(),
            "expected {} coefficients for {sig}",
            sig.blade_count()
        );
        Self { sig, coeffs }
    }

    /// Build from (mask, integer coefficient) terms; repeated masks add up.
    pub fn from_terms(sig: Signature, terms: &[(usize, i64)]) -> Self {
        let mut mv = Self::zero(sig);
        for &(mask, c) in terms {
            mv.add_term(mask, S::from_i64(c));
        }
        mv
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: usize) -> &S {
        &self.coeffs[mask]
    }

    pub fn scalar_part(&self) -> &S {
        &self.coeffs[0]
    }

    /// Add `c` to the coefficient of the blade with the given mask.
    pub fn add_term(&mut self, mask: usize, c: S) {
        assert!(mask < self.sig.blade_count(), "blade {mask:#b} out of range for {}", self.sig);
        self.coeffs[mask] += c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Keep the grade-k coefficients, zero all others. Panics when k > n.
    pub fn grade_part(&self, k: u32) -> Self {
        assert!(k <= self.sig.n(), "grade {k} out of range for {}", self.sig);
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(mask, c)| {
                if mask.count_ones() == k {
                    c.clone()
                } else {
                    S::zero()
                }
            })
            .collect();
        Self { sig: self.sig, coeffs }
    }

    pub fn scale(&self, factor: &S) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect();
        Self { sig: self.sig, coeffs }
    }

    /// The geometric product, bilinear extension of the blade product.
    pub fn geometric_product(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.sig, rhs.sig,
            "signature mismatch: {} vs {}",
            self.sig, rhs.sig
        );
        let table = product_table(self.sig);
        let mut out = vec![S::zero(); self.coeffs.len()];
        for (u, cu) in self.coeffs.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            for (v, cv) in rhs.coeffs.iter().enumerate() {
                if cv.is_zero() {
                    continue;
                }
                let term = cu.clone() * cv.clone();
                if table.sign(u, v) > 0 {
                    out[u ^ v] += term;
                } else {
                    out[u ^ v] -= term;
                }
            }
        }
        Self { sig: self.sig, coeffs: out }
    }

    /// Euclidean 2-norm of the coefficient vector, as f64.
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| {
                let v = c.to_f64();
                v * v
            })
            .sum::<f64>()
            .sqrt()
    }

    /// Largest coefficient magnitude, as f64.
    pub fn coeff_max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        assert_eq!(
            self.sig, rhs.sig,
            "signature mismatch: {} vs {}",
            self.sig, rhs.sig
        );
        let coeffs = self
            .coeffs
            .iter()
            .zip(rhs.coeffs.iter())
            .map(|(a, b)| f(a, b))
            .collect();
        Self { sig: self.sig, coeffs }
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<S: Scalar> $trait for Multivector<S> {
            type Output = Multivector<S>;
            fn $method(self, rhs: Multivector<S>) -> Multivector<S> {
                $body(&self, &rhs)
            }
        }
        impl<S: Scalar> $trait<&Multivector<S>> for Multivector<S> {
            type Output = Multivector<S>;
            fn $method(self, rhs: &Multivector<S>) -> Multivector<S> {
                $body(&self, rhs)
            }
        }
        impl<S: Scalar> $trait<Multivector<S>> for &Multivector<S> {
            type Output = Multivector<S>;
            fn $method(self, rhs: Multivector<S>) -> Multivector<S> {
                $body(self, &rhs)
            }
        }
        impl<S: Scalar> $trait<&Multivector<S>> for &Multivector<S> {
            type Output = Multivector<S>;
            fn $method(self, rhs: &Multivector<S>) -> Multivector<S> {
                $body(self, rhs)
            }
        }
    };
}

impl_binop!(Add, add, |a: &Multivector<S>, b: &Multivector<S>| a
    .zip_with(b, |x, y| x.clone() + y.clone()));
impl_binop!(Sub, sub, |a: &Multivector<S>, b: &Multivector<S>| a
    .zip_with(b, |x, y| x.clone() - y.clone()));
impl_binop!(Mul, mul, |a: &Multivector<S>, b: &Multivector<S>| a
    .geometric_product(b));

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        -&self
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        let coeffs = self.coeffs.iter().map(|c| -c.clone()).collect();
        Multivector {
            sig: self.sig,
            coeffs,
        }
    }
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mask == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", BladeIndex::new(mask).label())?;
            } else {
                write!(f, "{abs}*{}", BladeIndex::new(mask).label())?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
