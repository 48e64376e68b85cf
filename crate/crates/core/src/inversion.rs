//! Multivector inverses for n ≤ 3.
//!
//! For n ≤ 2 the Clifford conjugate gives a⁻¹ = ā/(aā) directly. For n = 3
//! the conjugate product a·ā is scalar-plus-pseudoscalar rather than scalar,
//! and one more grade negation clears the pseudoscalar:
//! a⁻¹ = C·(aC)₃̄ / (a·C·(aC)₃̄) with C = a with grades {1,2} negated.
//! The denominator must come out as a pure scalar; that is certified at
//! runtime, and any surviving higher-grade component is reported as an
//! internal invariant violation rather than folded into the result.

use thiserror::Error;

use crate::involution::{clifford_conjugate, GradeNegationMap};
use crate::multivector::Multivector;
use crate::scalar::{Scalar, DEFAULT_TOLERANCE};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InverseError {
    #[error("multivector is not invertible")]
    NonInvertible,
    #[error("no closed-form inverse for n = {n}; supported dimensions are n <= 3")]
    UnsupportedDimension { n: u32 },
    #[error("denominator has a nonzero grade-{grade} component: geometric product tables are inconsistent")]
    InternalInvariantViolation { grade: u32 },
}

/// Extract the grade-0 coefficient of `d`, failing if any other component
/// survives. `scale` bounds the expected magnitude in float mode.
fn certify_scalar<S: Scalar>(
    d: &Multivector<S>,
    scale: f64,
    tol: f64,
) -> Result<S, InverseError> {
    for (mask, c) in d.coeffs().iter().enumerate().skip(1) {
        let vanishes = if S::EXACT {
            c.is_zero()
        } else {
            c.to_f64().abs() <= tol * scale
        };
        if !vanishes {
            return Err(InverseError::InternalInvariantViolation { grade: mask.count_ones() });
        }
    }
    Ok(d.scalar_part().clone())
}

/// Conjugate/norm inverse for n ≤ 2: a⁻¹ = ā/(aā).
pub fn inverse_n2<S: Scalar>(a: &Multivector<S>) -> Result<Multivector<S>, InverseError> {
    inverse_n2_with(a, DEFAULT_TOLERANCE)
}

/// As [`inverse_n2`], with an explicit float-mode singularity tolerance:
/// the scalar aā counts as zero when |aā| ≤ tol.
pub fn inverse_n2_with<S: Scalar>(
    a: &Multivector<S>,
    tol: f64,
) -> Result<Multivector<S>, InverseError> {
    assert!(a.sig().n() <= 2, "inverse_n2 requires n <= 2");
    let conj = clifford_conjugate(a);
    let norm = a * &conj;
    let scale = a.coeff_norm().powi(2);
    let s = certify_scalar(&norm, scale, tol)?;
    let invertible = if S::EXACT {
        !s.is_zero()
    } else {
        s.to_f64().abs() > tol
    };
    if !invertible {
        return Err(InverseError::NonInvertible);
    }
    Ok(conj.scale(&s.try_recip().expect("nonzero scalar")))
}

/// Three-dimensional inverse a⁻¹ = C·(aC)₃̄ / (a·C·(aC)₃̄), C = a_{1̄,2̄}.
pub fn inverse_n3<S: Scalar>(a: &Multivector<S>) -> Result<Multivector<S>, InverseError> {
    inverse_n3_with(a, DEFAULT_TOLERANCE)
}

/// As [`inverse_n3`], with an explicit float-mode tolerance. The denominator
/// is degree 4 in the coefficients of `a`, so the zero test is relative:
/// it counts as zero when |d| ≤ tol·‖a‖⁴.
pub fn inverse_n3_with<S: Scalar>(
    a: &Multivector<S>,
    tol: f64,
) -> Result<Multivector<S>, InverseError> {
    let sig = a.sig();
    assert_eq!(sig.n(), 3, "inverse_n3 requires n = 3");
    let conj = GradeNegationMap::new(sig, &[1, 2]).expect("grades valid for n = 3");
    let negate_top = GradeNegationMap::new(sig, &[3]).expect("grades valid for n = 3");

    let c = conj.apply(a);
    let ac = a * &c;
    let numer = &c * &negate_top.apply(&ac);
    let den = a * &numer;

    let scale = a.coeff_norm().powi(4);
    let d = certify_scalar(&den, scale, tol)?;
    let invertible = if S::EXACT {
        !d.is_zero()
    } else {
        d.to_f64().abs() > tol * scale
    };
    if !invertible {
        return Err(InverseError::NonInvertible);
    }
    Ok(numer.scale(&d.try_recip().expect("nonzero scalar")))
}

/// Dispatch on dimension: n ≤ 2 uses the conjugate/norm formula, n = 3 the
/// three-dimensional formula, anything larger is unsupported.
pub fn inverse<S: Scalar>(a: &Multivector<S>) -> Result<Multivector<S>, InverseError> {
    inverse_with(a, DEFAULT_TOLERANCE)
}

pub fn inverse_with<S: Scalar>(
    a: &Multivector<S>,
    tol: f64,
) -> Result<Multivector<S>, InverseError> {
    match a.sig().n() {
        0..=2 => inverse_n2_with(a, tol),
        3 => inverse_n3_with(a, tol),
        n => Err(InverseError::UnsupportedDimension { n }),
    }
}
