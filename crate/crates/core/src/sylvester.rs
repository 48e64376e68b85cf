//! Closed-form solution of a·x + x·b = c.
//!
//! Multiplying the equation by a on the left and by b̄ on the right and
//! adding gives, because b+b̄ and b·b̄ are central for n ≤ 3,
//!
//! ```text
//! x = [(a² + b·b̄) + a·(b + b̄)]⁻¹ · (a·c + c·b̄)        (formula A)
//! x = (ā·c + c·b) · [(b² + ā·a) + b·(a + ā)]⁻¹        (formula B)
//! ```
//!
//! Either bracket can fail to be invertible; nothing is known about how the
//! two singular sets relate, so the `Auto` policy walks the b=a special
//! case, formula A, formula B, and finally the exact linear-system oracle,
//! which also supplies the underdetermined/inconsistent diagnosis when no
//! unique solution exists.

use crate::inversion::{inverse_with, InverseError};
use crate::involution::{clifford_conjugate, is_central};
use crate::multivector::Multivector;
use crate::oracle::{oracle_solve, OracleStatus};
use crate::scalar::{Scalar, DEFAULT_TOLERANCE};

/// Which solution paths `solve` may take.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MethodPolicy {
    /// b=a special case, then formula A, then formula B, then the oracle.
    Auto,
    FormulaAOnly,
    FormulaBOnly,
    OracleOnly,
}

/// The path that actually produced an answer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    FormulaA,
    FormulaB,
    SpecialCaseBA,
    Oracle,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::FormulaA => "formula_a",
            Method::FormulaB => "formula_b",
            Method::SpecialCaseBA => "special_ba",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolveStatus {
    Unique,
    /// Every attempted route failed to produce a unique solution.
    Singular,
}

/// Result of a solve attempt.
///
/// `denominator` is the bracketed multivector whose inverse was (or could
/// not be) taken; the singularity conditions of the closed forms are
/// conditions on it, so it is kept observable. Oracle answers have none.
#[derive(Clone, Debug)]
pub struct SolveOutcome<S> {
    pub status: SolveStatus,
    pub solution: Option<Multivector<S>>,
    pub method: Option<Method>,
    pub denominator: Option<Multivector<S>>,
    /// The oracle's rank classification, attached when the closed forms
    /// fail and the oracle also finds no unique solution.
    pub diagnosis: Option<OracleStatus>,
    /// Dimension of the solution space when the oracle ran and the system
    /// was not uniquely solvable.
    pub nullity: Option<usize>,
}

impl<S: Scalar> SolveOutcome<S> {
    fn unique(x: Multivector<S>, method: Method, denominator: Option<Multivector<S>>) -> Self {
        Self {
            status: SolveStatus::Unique,
            solution: Some(x),
            method: Some(method),
            denominator,
            diagnosis: None,
            nullity: None,
        }
    }

    fn singular(denominator: Option<Multivector<S>>) -> Self {
        Self {
            status: SolveStatus::Singular,
            solution: None,
            method: None,
            denominator,
            diagnosis: None,
            nullity: None,
        }
    }

    pub fn is_unique(&self) -> bool {
        self.status == SolveStatus::Unique
    }
}

fn check_common_signature<S: Scalar>(a: &Multivector<S>, b: &Multivector<S>, c: &Multivector<S>) {
    assert_eq!(a.sig(), b.sig(), "signature mismatch: {} vs {}", a.sig(), b.sig());
    assert_eq!(a.sig(), c.sig(), "signature mismatch: {} vs {}", a.sig(), c.sig());
}

/// a·x + x·b − c, zero exactly when x solves the equation.
pub fn residual<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
    c: &Multivector<S>,
    x: &Multivector<S>,
) -> Multivector<S> {
    &(&(a * x) + &(x * b)) - c
}

/// Formula A: x = [(a² + b·b̄) + a·(b + b̄)]⁻¹·(a·c + c·b̄).
pub fn solve_formula_a<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
    c: &Multivector<S>,
) -> SolveOutcome<S> {
    solve_formula_a_with(a, b, c, DEFAULT_TOLERANCE)
}

pub fn solve_formula_a_with<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
    c: &Multivector<S>,
    tol: f64,
) -> SolveOutcome<S> {
    check_common_signature(a, b, c);
    assert!(a.sig().n() <= 3, "closed-form methods require n <= 3");
    let b_conj = clifford_conjugate(b);
    let b_sum = b + &b_conj;
    let b_norm = b * &b_conj;
    // The derivation moves b+b̄ and b·b̄ past x; that is only sound when
    // both are central, so it is checked, not assumed.
    assert!(
        is_central(&b_sum) && is_central(&b_norm),
        "b+conj(b) or b*conj(b) is not central; formula A does not apply"
    );
    let den = &(&(a * a) + &b_norm) + &(a * &b_sum);
    match inverse_with(&den, tol) {
        Ok(den_inv) => {
            let rhs = &(a * c) + &(c * &b_conj);
            SolveOutcome::unique(den_inv * rhs, Method::FormulaA, Some(den))
        }
        Err(InverseError::NonInvertible) => SolveOutcome::singular(Some(den)),
        Err(e) => panic!("formula A denominator: {e}"),
    }
}

/// Formula B, the mirror expression: x = (ā·c + c·b)·[(b² + ā·a) + b·(a + ā)]⁻¹.
/// The inverse multiplies on the right.
pub fn solve_formula_b<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
    c: &Multivector<S>,
) -> SolveOutcome<S> {
    solve_formula_b_with(a, b, c, DEFAULT_TOLERANCE)
}

pub fn solve_formula_b_with<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
    c: &Multivector<S>,
    tol: f64,
) -> SolveOutcome<S> {
    check_common_signature(a, b, c);
    assert!(a.sig().n() <= 3, "closed-form methods require n <= 3");
    let a_conj = clifford_conjugate(a);
    let a_sum = a + &a_conj;
    let a_norm = &a_conj * a;
    assert!(
        is_central(&a_sum) && is_central(&a_norm),
        "a+conj(a) or conj(a)*a is not central; formula B does not apply"
    );
    let den = &(&(b * b) + &a_norm) + &(b * &a_sum);
    match inverse_with(&den, tol) {
        Ok(den_inv) => {
            let rhs = &(&a_conj * c) + &(c * b);
            SolveOutcome::unique(rhs * den_inv, Method::FormulaB, Some(den))
        }
        Err(InverseError::NonInvertible) => SolveOutcome::singular(Some(den)),
        Err(e) => panic!("formula B denominator: {e}"),
    }
}

/// The b = a reduction: x = [2(a+ā)]⁻¹·(c + a⁻¹·c·ā).
///
/// Needs a itself invertible; that failure is reported as an error rather
/// than a singular outcome because it is a precondition of the reduced
/// form, not a singularity of it.
pub fn solve_equal_coeff<S: Scalar>(
    a: &Multivector<S>,
    c: &Multivector<S>,
) -> Result<SolveOutcome<S>, InverseError> {
    solve_equal_coeff_with(a, c, DEFAULT_TOLERANCE)
}

pub fn solve_equal_coeff_with<S: Scalar>(
    a: &Multivector<S>,
    c: &Multivector<S>,
    tol: f64,
) -> Result<SolveOutcome<S>, InverseError> {
    assert_eq!(a.sig(), c.sig(), "signature mismatch: {} vs {}", a.sig(), c.sig());
    assert!(a.sig().n() <= 3, "closed-form methods require n <= 3");
    let a_conj = clifford_conjugate(a);
    let den = (a + &a_conj).scale(&S::from_i64(2));
    let a_inv = inverse_with(a, tol)?;
    match inverse_with(&den, tol) {
        Ok(den_inv) => {
            let rhs = c + &(&(a_inv * c) * &a_conj);
            Ok(SolveOutcome::unique(den_inv * rhs, Method::SpecialCaseBA, Some(den)))
        }
        Err(InverseError::NonInvertible) => Ok(SolveOutcome::singular(Some(den))),
        Err(e) => Err(e),
    }
}

/// Solve a·x + x·b = c under the given policy.
///
/// `Auto` tries the b=a special case (when b equals a coefficientwise),
/// then formula A, then formula B, then the oracle; a singular special
/// case does not short-circuit, since the reduced form needs a invertible
/// while the formulas do not. With n ≥ 4 (where no closed form exists)
/// `Auto` goes straight to the oracle.
pub fn solve<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
    c: &Multivector<S>,
    policy: MethodPolicy,
) -> SolveOutcome<S> {
    solve_with(a, b, c, policy, DEFAULT_TOLERANCE)
}

pub fn solve_with<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
    c: &Multivector<S>,
    policy: MethodPolicy,
    tol: f64,
) -> SolveOutcome<S> {
    check_common_signature(a, b, c);
    match policy {
        MethodPolicy::FormulaAOnly => solve_formula_a_with(a, b, c, tol),
        MethodPolicy::FormulaBOnly => solve_formula_b_with(a, b, c, tol),
        MethodPolicy::OracleOnly => solve_via_oracle(a, b, c, None),
        MethodPolicy::Auto => {
            let mut last_den = None;
            if a.sig().n() <= 3 {
                if a == b {
                    if let Ok(out) = solve_equal_coeff_with(a, c, tol) {
                        if out.is_unique() {
                            return out;
                        }
                        last_den = out.denominator;
                    }
                }
                let fa = solve_formula_a_with(a, b, c, tol);
                if fa.is_unique() {
                    return fa;
                }
                last_den = fa.denominator.or(last_den);
                let fb = solve_formula_b_with(a, b, c, tol);
                if fb.is_unique() {
                    return fb;
                }
            }
            solve_via_oracle(a, b, c, last_den)
        }
    }
}

fn solve_via_oracle<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
    c: &Multivector<S>,
    denominator: Option<Multivector<S>>,
) -> SolveOutcome<S> {
    let out = oracle_solve(a, b, c);
    match out.status {
        OracleStatus::Unique => SolveOutcome::unique(
            out.particular.expect("unique outcome carries a solution"),
            Method::Oracle,
            denominator,
        ),
        status => SolveOutcome {
            status: SolveStatus::Singular,
            solution: None,
            method: None,
            denominator,
            diagnosis: Some(status),
            nullity: Some(out.nullity),
        },
    }
}

/// Solve many independent instances. With the `parallel` feature the batch
/// fans out over rayon; instances never interact.
pub fn solve_batch<S: Scalar>(
    instances: &[(Multivector<S>, Multivector<S>, Multivector<S>)],
    policy: MethodPolicy,
) -> Vec<SolveOutcome<S>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        instances
            .par_iter()
            .map(|(a, b, c)| solve(a, b, c, policy))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        solve_batch_sequential(instances, policy)
    }
}

/// Sequential batch path, always available; the benchmarks compare the two.
pub fn solve_batch_sequential<S: Scalar>(
    instances: &[(Multivector<S>, Multivector<S>, Multivector<S>)],
    policy: MethodPolicy,
) -> Vec<SolveOutcome<S>> {
    instances.iter().map(|(a, b, c)| solve(a, b, c, policy)).collect()
}
