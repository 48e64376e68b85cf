//! Expected center formulas for the seven algebras where Clifford
//! conjugation produces both Cen₁ = a+ā and Cen₂ = a·ā.
//!
//! The formulas are encoded as data (per-blade sign tables) rather than
//! re-derived through the product, so a transcription slip in the algebra
//! code cannot silently cancel against the same slip here. For the
//! two-dimensional rows the flat quaternion-style label a₃ denotes the e₁₂
//! coefficient; for the three-dimensional rows a₃ is the e₃ coefficient.

use crate::involution::{cen1, cen2, is_central, GradeNegationMap};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::Signature;

/// One row of the verified-center table: the signs of the squared
/// coefficients in the scalar part of a·ā, indexed by blade mask.
#[derive(Clone, Copy, Debug)]
pub struct Table1Row {
    pub p: u32,
    pub q: u32,
    pub cen2_square_signs: &'static [i8],
}

impl Table1Row {
    pub fn sig(&self) -> Signature {
        Signature::new(self.p, self.q).expect("table rows carry valid signatures")
    }
}

/// Blade-mask order for n = 2: [1, e1, e2, e12]; for n = 3:
/// [1, e1, e2, e12, e3, e13, e23, e123].
pub const TABLE1: [Table1Row; 7] = [
    Table1Row { p: 2, q: 0, cen2_square_signs: &[1, -1, -1, 1] },
    Table1Row { p: 1, q: 1, cen2_square_signs: &[1, -1, 1, -1] },
    Table1Row { p: 0, q: 2, cen2_square_signs: &[1, 1, 1, 1] },
    Table1Row { p: 3, q: 0, cen2_square_signs: &[1, -1, -1, 1, -1, 1, 1, -1] },
    Table1Row { p: 2, q: 1, cen2_square_signs: &[1, -1, -1, 1, 1, -1, -1, 1] },
    Table1Row { p: 1, q: 2, cen2_square_signs: &[1, -1, 1, -1, 1, -1, 1, -1] },
    Table1Row { p: 0, q: 3, cen2_square_signs: &[1, 1, 1, 1, 1, 1, 1, 1] },
];

/// Pseudoscalar cross terms of the n = 3 rows:
/// 2(a₀a₁₂₃ − a₁a₂₃ + a₂a₁₃ − a₃a₁₂)·I₃, written as (mask, mask, sign).
const CEN2_PSEUDO_TERMS: [(usize, usize, i8); 4] = [(0, 7, 1), (1, 6, -1), (2, 5, 1), (3, 4, -1)];

/// The printed Cen₁ column: 2a₀ for n = 2, 2(a₀ + a₁₂₃I₃) for n = 3.
pub fn expected_cen1<S: Scalar>(a: &Multivector<S>) -> Multivector<S> {
    let sig = a.sig();
    let two = S::from_i64(2);
    let mut out = Multivector::zero(sig);
    out.add_term(0, a.coeff(0).clone() * two.clone());
    if sig.n() == 3 {
        let top = sig.pseudoscalar_mask();
        out.add_term(top, a.coeff(top).clone() * two);
    }
    out
}

/// The printed Cen₂ column: signed squares in the scalar slot plus, for the
/// n = 3 rows, the shared pseudoscalar cross terms.
pub fn expected_cen2<S: Scalar>(row: &Table1Row, a: &Multivector<S>) -> Multivector<S> {
    let sig = a.sig();
    let mut scalar = S::zero();
    for (mask, &sign) in row.cen2_square_signs.iter().enumerate() {
        let sq = a.coeff(mask).clone() * a.coeff(mask).clone();
        if sign > 0 {
            scalar += sq;
        } else {
            scalar -= sq;
        }
    }
    let mut out = Multivector::scalar(sig, scalar);
    if sig.n() == 3 {
        let mut pseudo = S::zero();
        for &(j, k, sign) in &CEN2_PSEUDO_TERMS {
            let prod = a.coeff(j).clone() * a.coeff(k).clone();
            if sign > 0 {
                pseudo += prod;
            } else {
                pseudo -= prod;
            }
        }
        out.add_term(sig.pseudoscalar_mask(), pseudo * S::from_i64(2));
    }
    out
}

/// Outcome of checking one sample against a row: does the conjugation
/// reproduce both printed formulas, and are both results central?
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowSampleCheck {
    pub cen1_matches: bool,
    pub cen2_matches: bool,
    pub cen1_central: bool,
    pub cen2_central: bool,
}

impl RowSampleCheck {
    pub fn all_ok(&self) -> bool {
        self.cen1_matches && self.cen2_matches && self.cen1_central && self.cen2_central
    }
}

pub fn check_row_sample<S: Scalar>(row: &Table1Row, a: &Multivector<S>) -> RowSampleCheck {
    let m = GradeNegationMap::clifford_conjugation(a.sig());
    let c1 = cen1(a, &m);
    let c2 = cen2(a, &m);
    RowSampleCheck {
        cen1_matches: c1 == expected_cen1(a),
        cen2_matches: c2 == expected_cen2(row, a),
        cen1_central: is_central(&c1),
        cen2_central: is_central(&c2),
    }
}
