//! Ground-truth solver: a·x + x·b = c flattened to a 2ⁿ-dimensional linear
//! system over the blade coefficients, solved by exact Gauss–Jordan
//! elimination over rationals (tolerance-based partial pivoting for floats).
//!
//! Also provides the left/right multiplication matrices L_a and R_b with
//! flatten(a·x) = L_a·flatten(x) and flatten(x·b) = R_b·flatten(x), which
//! the identity tests lean on.

use crate::multivector::Multivector;
use crate::scalar::{is_negligible, Scalar};
use crate::signature::Signature;

/// Default relative rank tolerance for float-mode elimination; scaled by
/// the largest entry of the system matrix.
pub const DEFAULT_RANK_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Matrix representation of multiplication by a fixed multivector.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiplicationMatrix<S> {
    sig: Signature,
    side: Side,
    /// Row-major 2ⁿ×2ⁿ entries.
    entries: Vec<S>,
}

impl<S: Scalar> MultiplicationMatrix<S> {
    fn from_columns(sig: Signature, side: Side, columns: impl Iterator<Item = Multivector<S>>) -> Self {
        let n = sig.blade_count();
        let mut entries = vec![S::zero(); n * n];
        for (j, col) in columns.enumerate() {
            for (i, c) in col.coeffs().iter().enumerate() {
                entries[i * n + j] = c.clone();
            }
        }
        Self { sig, side, entries }
    }

    /// L_a: column j is flatten(a · bladeⱼ).
    pub fn left(a: &Multivector<S>) -> Self {
        let sig = a.sig();
        Self::from_columns(
            sig,
            Side::Left,
            sig.blade_masks().map(|m| a.geometric_product(&Multivector::basis_blade(sig, m))),
        )
    }

    /// R_b: column j is flatten(bladeⱼ · b).
    pub fn right(b: &Multivector<S>) -> Self {
        let sig = b.sig();
        Self::from_columns(
            sig,
            Side::Right,
            sig.blade_masks().map(|m| Multivector::basis_blade(sig, m).geometric_product(b)),
        )
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.sig.blade_count()
    }

    pub fn entry(&self, row: usize, col: usize) -> &S {
        &self.entries[row * self.dim() + col]
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    /// Apply to a flattened multivector.
    pub fn apply(&self, x: &Multivector<S>) -> Multivector<S> {
        assert_eq!(self.sig, x.sig(), "signature mismatch");
        let n = self.dim();
        let coeffs = (0..n)
            .map(|i| {
                let mut acc = S::zero();
                for (j, xc) in x.coeffs().iter().enumerate() {
                    if xc.is_zero() {
                        continue;
                    }
                    acc += self.entries[i * n + j].clone() * xc.clone();
                }
                acc
            })
            .collect();
        Multivector::from_coeffs(self.sig, coeffs)
    }

    /// Plain matrix product self·other (entrywise; the `side` tag of self
    /// is kept for bookkeeping only).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.sig, other.sig, "signature mismatch");
        let n = self.dim();
        let mut entries = vec![S::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let lhs = &self.entries[i * n + k];
                if lhs.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let rhs = &other.entries[k * n + j];
                    if rhs.is_zero() {
                        continue;
                    }
                    entries[i * n + j] += lhs.clone() * rhs.clone();
                }
            }
        }
        Self { sig: self.sig, side: self.side, entries }
    }

    pub fn identity(sig: Signature, side: Side) -> Self {
        let n = sig.blade_count();
        let mut entries = vec![S::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = S::one();
        }
        Self { sig, side, entries }
    }
}

/// Free-function spellings of the two constructors.
pub fn left_matrix<S: Scalar>(a: &Multivector<S>) -> MultiplicationMatrix<S> {
    MultiplicationMatrix::left(a)
}

pub fn right_matrix<S: Scalar>(b: &Multivector<S>) -> MultiplicationMatrix<S> {
    MultiplicationMatrix::right(b)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleStatus {
    Unique,
    Underdetermined,
    Inconsistent,
}

/// Rank classification of (L_a + R_b)·x = c, with a particular solution
/// whenever the system is consistent.
#[derive(Clone, Debug)]
pub struct OracleOutcome<S> {
    pub status: OracleStatus,
    pub particular: Option<Multivector<S>>,
    /// Dimension of the homogeneous solution space (2ⁿ − rank).
    pub nullity: usize,
    /// Basis of the homogeneous solution space; only filled on request.
    pub nullspace: Option<Vec<Multivector<S>>>,
}

#[derive(Clone, Copy, Debug)]
pub struct OracleOptions {
    pub compute_nullspace: bool,
    pub rank_tolerance: f64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            compute_nullspace: false,
            rank_tolerance: DEFAULT_RANK_TOLERANCE,
        }
    }
}

/// Solve a·x + x·b = c by exact elimination on the flattened system.
pub fn oracle_solve<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
    c: &Multivector<S>,
) -> OracleOutcome<S> {
    oracle_solve_with(a, b, c, OracleOptions::default())
}

pub fn oracle_solve_with<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
    c: &Multivector<S>,
    options: OracleOptions,
) -> OracleOutcome<S> {
    let sig = a.sig();
    assert_eq!(sig, b.sig(), "signature mismatch: {} vs {}", sig, b.sig());
    assert_eq!(sig, c.sig(), "signature mismatch: {} vs {}", sig, c.sig());

    let l = MultiplicationMatrix::left(a);
    let r = MultiplicationMatrix::right(b);
    let n = sig.blade_count();
    let mut matrix = Vec::with_capacity(n * n);
    for i in 0..n * n {
        matrix.push(l.entries()[i].clone() + r.entries()[i].clone());
    }
    let rhs: Vec<S> = c.coeffs().to_vec();

    let sys = solve_linear_system(matrix, rhs, n, options);

    let status = if !sys.consistent {
        OracleStatus::Inconsistent
    } else if sys.rank == n {
        OracleStatus::Unique
    } else {
        OracleStatus::Underdetermined
    };
    OracleOutcome {
        status,
        particular: sys.solution.map(|v| Multivector::from_coeffs(sig, v)),
        nullity: n - sys.rank,
        nullspace: sys
            .nullspace
            .map(|vs| vs.into_iter().map(|v| Multivector::from_coeffs(sig, v)).collect()),
    }
}

struct LinSysResult<S> {
    rank: usize,
    consistent: bool,
    solution: Option<Vec<S>>,
    nullspace: Option<Vec<Vec<S>>>,
}

/// Gauss–Jordan to reduced row echelon form on the augmented system.
/// Exact scalars pivot on the first nonzero entry; floats pick the largest
/// entry and treat anything at or below the scaled tolerance as zero.
fn solve_linear_system<S: Scalar>(
    mut m: Vec<S>,
    mut rhs: Vec<S>,
    n: usize,
    options: OracleOptions,
) -> LinSysResult<S> {
    let tol = if S::EXACT {
        0.0
    } else {
        let max_abs = m.iter().map(|v| v.to_f64().abs()).fold(0.0, f64::max);
        options.rank_tolerance * max_abs.max(1.0)
    };

    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut row = 0;
    for col in 0..n {
        let pivot_row = if S::EXACT {
            (row..n).find(|&r| !m[r * n + col].is_zero())
        } else {
            (row..n)
                .filter(|&r| !is_negligible(&m[r * n + col], tol))
                .max_by(|&r1, &r2| {
                    let a1 = m[r1 * n + col].to_f64().abs();
                    let a2 = m[r2 * n + col].to_f64().abs();
                    a1.partial_cmp(&a2).expect("finite pivots")
                })
        };
        let Some(pr) = pivot_row else { continue };
        if pr != row {
            for j in 0..n {
                m.swap(pr * n + j, row * n + j);
            }
            rhs.swap(pr, row);
        }
        // Normalize the pivot row.
        let p = m[row * n + col].clone();
        let pinv = p.try_recip().expect("pivot is nonzero");
        for j in col..n {
            let v = m[row * n + j].clone() * pinv.clone();
            m[row * n + j] = v;
        }
        m[row * n + col] = S::one();
        rhs[row] = rhs[row].clone() * pinv;
        // Eliminate the column everywhere else.
        for r in 0..n {
            if r == row || m[r * n + col].is_zero() {
                continue;
            }
            let f = m[r * n + col].clone();
            for j in col..n {
                let v = m[r * n + j].clone() - f.clone() * m[row * n + j].clone();
                m[r * n + j] = v;
            }
            m[r * n + col] = S::zero();
            let v = rhs[r].clone() - f * rhs[row].clone();
            rhs[r] = v;
        }
        pivots.push((row, col));
        row += 1;
        if row == n {
            break;
        }
    }
    let rank = row;

    let consistent = (rank..n).all(|r| is_negligible(&rhs[r], tol));

    let solution = consistent.then(|| {
        let mut x = vec![S::zero(); n];
        for &(r, c) in &pivots {
            x[c] = rhs[r].clone();
        }
        x
    });

    let nullspace = options.compute_nullspace.then(|| {
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        (0..n)
            .filter(|col| !pivot_cols.contains(col))
            .map(|free| {
                let mut v = vec![S::zero(); n];
                v[free] = S::one();
                for &(r, c) in &pivots {
                    v[c] = -m[r * n + free].clone();
                }
                v
            })
            .collect()
    });

    LinSysResult {
        rank,
        consistent,
        solution,
        nullspace,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use rand::{Rng, SeedableRng};

    fn cl(p: u32, q: u32) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn mv(sig: Signature, terms: &[(usize, i64)]) -> Multivector<Rational> {
        Multivector::from_terms(sig, terms)
    }

    fn random_mv(sig: Signature, rng: &mut rand::rngs::StdRng) -> Multivector<Rational> {
        let terms: Vec<(usize, i64)> =
            sig.blade_masks().map(|m| (m, rng.gen_range(-9..=9))).collect();
        Multivector::from_terms(sig, &terms)
    }

    #[test]
    fn left_matrix_of_one_is_identity() {
        let sig = cl(2, 1);
        let l = MultiplicationMatrix::left(&Multivector::<Rational>::one(sig));
        assert_eq!(l, MultiplicationMatrix::identity(sig, Side::Left));
    }

    #[test]
    fn left_e1_squares_to_minus_identity_in_cl02() {
        let sig = cl(0, 2);
        let e1 = Multivector::<Rational>::basis_blade(sig, 0b01);
        let l = MultiplicationMatrix::left(&e1);
        let minus_id: Vec<Rational> = MultiplicationMatrix::<Rational>::identity(sig, Side::Left)
            .entries()
            .iter()
            .map(|v| -v.clone())
            .collect();
        assert_eq!(l.compose(&l).entries(), &minus_id[..]);
    }

    #[test]
    fn matrices_flatten_products() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for sig in [cl(2, 0), cl(1, 2), cl(2, 2)] {
            for _ in 0..10 {
                let a = random_mv(sig, &mut rng);
                let x = random_mv(sig, &mut rng);
                assert_eq!(MultiplicationMatrix::left(&a).apply(&x), &a * &x);
                assert_eq!(MultiplicationMatrix::right(&a).apply(&x), &x * &a);
            }
        }
    }

    #[test]
    fn matrix_identities_hold_exactly() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(4);
        for n in 1..=4u32 {
            for sig in Signature::all_with_dimension(n) {
                for _ in 0..5 {
                    let a = random_mv(sig, &mut rng);
                    let b = random_mv(sig, &mut rng);
                    let la = MultiplicationMatrix::left(&a);
                    let lb = MultiplicationMatrix::left(&b);
                    let ra = MultiplicationMatrix::right(&a);
                    let rb = MultiplicationMatrix::right(&b);
                    // L is a homomorphism, R reverses, and the two commute.
                    assert_eq!(MultiplicationMatrix::left(&(&a * &b)), la.compose(&lb));
                    assert_eq!(
                        MultiplicationMatrix::right(&(&b * &a)).entries(),
                        ra.compose(&rb).entries()
                    );
                    assert_eq!(la.compose(&rb).entries(), rb.compose(&la).entries());
                }
            }
        }
    }

    #[test]
    fn matrix_identities_spot_checked_at_high_dimension() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for sig in [cl(5, 0), cl(2, 3), cl(3, 3), cl(0, 6)] {
            let a = random_mv(sig, &mut rng);
            let b = random_mv(sig, &mut rng);
            assert_eq!(
                MultiplicationMatrix::left(&(&a * &b)),
                MultiplicationMatrix::left(&a).compose(&MultiplicationMatrix::left(&b))
            );
            assert_eq!(
                MultiplicationMatrix::left(&a)
                    .compose(&MultiplicationMatrix::right(&b))
                    .entries(),
                MultiplicationMatrix::right(&b)
                    .compose(&MultiplicationMatrix::left(&a))
                    .entries()
            );
        }
    }

    #[test]
    fn left_matrix_is_linear_in_a() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(6);
        let sig = cl(3, 0);
        let a = random_mv(sig, &mut rng);
        let b = random_mv(sig, &mut rng);
        let sum = MultiplicationMatrix::left(&(&a + &b));
        let la = MultiplicationMatrix::left(&a);
        let lb = MultiplicationMatrix::left(&b);
        let added: Vec<Rational> = la
            .entries()
            .iter()
            .zip(lb.entries())
            .map(|(x, y)| x.clone() + y.clone())
            .collect();
        assert_eq!(sum.entries(), &added[..]);
    }

    #[test]
    fn reference_instance_is_unique_with_the_known_solution() {
        let sig = cl(3, 0);
        let a = mv(sig, &[(0, 3), (1, 3), (5, 2), (7, 5)]);
        let b = mv(sig, &[(0, 3), (2, 2), (4, 3), (7, 2)]);
        let c = mv(sig, &[(1, 5), (2, 3), (5, 4), (6, 1)]);
        let out = oracle_solve(&a, &b, &c);
        assert_eq!(out.status, OracleStatus::Unique);
        let expected = mv(
            sig,
            &[
                (0, 359_677),
                (1, 601_305),
                (2, -155_957),
                (3, 209_677),
                (4, -436_078),
                (5, 1_076_362),
                (6, -489_350),
                (7, 27_015),
            ],
        )
        .scale(&Rational::new(1.into(), 2_177_719.into()));
        assert_eq!(out.particular.unwrap(), expected);
    }

    #[test]
    fn zero_system_with_zero_rhs_is_fully_underdetermined() {
        let sig = cl(2, 0);
        let zero = Multivector::<Rational>::zero(sig);
        let out = oracle_solve_with(
            &zero,
            &zero,
            &zero,
            OracleOptions { compute_nullspace: true, ..Default::default() },
        );
        assert_eq!(out.status, OracleStatus::Underdetermined);
        assert_eq!(out.nullity, sig.blade_count());
        assert_eq!(out.nullspace.unwrap().len(), sig.blade_count());
        assert!(out.particular.unwrap().is_zero());
    }

    #[test]
    fn zero_system_with_nonzero_rhs_is_inconsistent() {
        let sig = cl(2, 0);
        let zero = Multivector::<Rational>::zero(sig);
        let one = Multivector::one(sig);
        let out = oracle_solve(&zero, &zero, &one);
        assert_eq!(out.status, OracleStatus::Inconsistent);
        assert!(out.particular.is_none());
    }

    #[test]
    fn unique_solutions_satisfy_the_equation() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(8);
        for sig in [cl(2, 0), cl(1, 1), cl(3, 0), cl(0, 3), cl(2, 2)] {
            for _ in 0..10 {
                let a = random_mv(sig, &mut rng);
                let b = random_mv(sig, &mut rng);
                let c = random_mv(sig, &mut rng);
                let out = oracle_solve(&a, &b, &c);
                if let Some(x) = &out.particular {
                    assert_eq!(&(&a * x) + &(x * &b), c, "{sig}");
                }
            }
        }
    }

    #[test]
    fn nullspace_vectors_solve_the_homogeneous_system() {
        let sig = cl(3, 0);
        let a = mv(sig, &[(3, 1)]); // e12
        let b = a.clone();
        let c = Multivector::one(sig);
        let out = oracle_solve_with(
            &a,
            &b,
            &c,
            OracleOptions { compute_nullspace: true, ..Default::default() },
        );
        assert_eq!(out.status, OracleStatus::Underdetermined);
        let basis = out.nullspace.unwrap();
        assert_eq!(basis.len(), out.nullity);
        for v in &basis {
            assert!((&(&a * v) + &(v * &b)).is_zero());
        }
    }

    #[test]
    fn float_elimination_matches_exact_on_random_systems() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(9);
        let sig = cl(3, 0);
        for _ in 0..20 {
            let terms: Vec<(usize, i64)> =
                sig.blade_masks().map(|m| (m, rng.gen_range(-9..=9))).collect();
            let c_terms: Vec<(usize, i64)> =
                sig.blade_masks().map(|m| (m, rng.gen_range(-9..=9))).collect();
            let ra = Multivector::<Rational>::from_terms(sig, &terms);
            let rc = Multivector::<Rational>::from_terms(sig, &c_terms);
            let fa = Multivector::<f64>::from_terms(sig, &terms);
            let fc = Multivector::<f64>::from_terms(sig, &c_terms);
            let exact = oracle_solve(&ra, &ra, &rc);
            let float = oracle_solve(&fa, &fa, &fc);
            assert_eq!(exact.status, float.status);
            if let (Some(xe), Some(xf)) = (&exact.particular, &float.particular) {
                for m in sig.blade_masks() {
                    assert!((xe.coeff(m).to_f64() - xf.coeff(m)).abs() <= 1e-6);
                }
            }
        }
    }
}
