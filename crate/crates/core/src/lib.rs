//! Clifford algebra Cl(p,q) arithmetic and a coordinate-free solver for the
//! Sylvester equation `a·x + x·b = c`.
//!
//! The closed-form solver covers `p+q ≤ 3`, where Clifford conjugation makes
//! `b+b̄` and `b·b̄` central, so the equation reduces to a single multivector
//! inverse. Every answer can be cross-checked against an exact linear-system
//! oracle over the 2ⁿ blade coefficients, and a symbolic search over
//! grade-negation involutions decides which algebras admit the two centers
//! the reduction needs (none for `n = 4, 5, 6`).
//!
//! Coefficients are generic over [`Scalar`] with two instantiations: exact
//! arbitrary-precision rationals ([`Rational`], the default wherever
//! correctness matters) and `f64`.
//!
//! With the `parallel` feature (on by default) batch solving and the center
//! search fan out over rayon; without it every entry point falls back to the
//! sequential path.

pub mod blade;
pub mod center_search;
pub mod inversion;
pub mod involution;
pub mod multivector;
pub mod oracle;
pub mod scalar;
pub mod signature;
pub mod sylvester;
pub mod table1;

pub use blade::{blade_product, BladeIndex};
pub use involution::{
    cen1, cen2, clifford_conjugate, grade_negate, is_central, CenterBasis, GradeNegationMap,
};
pub use multivector::Multivector;
pub use scalar::{Rational, Scalar, DEFAULT_TOLERANCE};
pub use signature::{Signature, SignatureError};
