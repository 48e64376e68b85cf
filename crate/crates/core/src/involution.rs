//! Grade-negation involutions, Clifford conjugation, and algebra centers.
//!
//! A grade-negation map flips the sign of every component whose grade lies
//! in a chosen subset of {0,…,n}. Clifford conjugation is the special case
//! {1,2} (for n ≤ 3), and the two derived quantities a+ā and a·ā are the
//! central elements the Sylvester reduction relies on.

use std::fmt;

use thiserror::Error;

use crate::blade::BladeIndex;
use crate::multivector::Multivector;
use crate::scalar::{Rational, Scalar, DEFAULT_TOLERANCE};
use crate::signature::Signature;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum InvolutionError {
    #[error("grade {grade} out of range for {sig}")]
    GradeOutOfRange { grade: u32, sig: Signature },
}

/// Sign-per-grade involution a ↦ a with the listed grades negated.
///
/// Applying the map twice is the identity regardless of the grade set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GradeNegationMap {
    sig: Signature,
    /// Bit g set ⇔ grade g is negated; grades run 0..=n, so u8 suffices.
    bits: u8,
}

impl GradeNegationMap {
    pub fn new(sig: Signature, grades: &[u32]) -> Result<Self, InvolutionError> {
        let mut bits = 0u8;
        for &g in grades {
            if g > sig.n() {
                return Err(InvolutionError::GradeOutOfRange { grade: g, sig });
            }
            bits |= 1 << g;
        }
        Ok(Self { sig, bits })
    }

    /// Build directly from a grade bitmask (bit g ⇔ negate grade g).
    /// Used by the exhaustive search over all 2^(n+1) patterns.
    pub fn from_bit_mask(sig: Signature, bits: u16) -> Self {
        assert!(
            u32::from(bits) < (2u32 << sig.n()),
            "grade bits {bits:#b} out of range for {sig}"
        );
        Self { sig, bits: bits as u8 }
    }

    /// Clifford conjugation: grade inversion composed with reversion. For
    /// n ≤ 3 this negates exactly grades {1,2}; in general it negates the
    /// grades g with g mod 4 ∈ {1,2}.
    pub fn clifford_conjugation(sig: Signature) -> Self {
        let mut bits = 0u8;
        for g in 0..=sig.n() {
            if g % 4 == 1 || g % 4 == 2 {
                bits |= 1 << g;
            }
        }
        Self { sig, bits }
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn bit_mask(&self) -> u16 {
        self.bits as u16
    }

    pub fn negates(&self, grade: u32) -> bool {
        grade <= self.sig.n() && self.bits >> grade & 1 == 1
    }

    /// +1 or −1 factor applied to components of the given grade.
    pub fn sign(&self, grade: u32) -> i32 {
        if self.negates(grade) {
            -1
        } else {
            1
        }
    }

    pub fn negated_grades(&self) -> Vec<u32> {
        (0..=self.sig.n()).filter(|&g| self.negates(g)).collect()
    }

    /// The map realising the global sign flip: negating the complementary
    /// grade set yields σ′ with σ′(a) = −σ(a) for every a.
    pub fn complement(&self) -> Self {
        let all = ((2u16 << self.sig.n()) - 1) as u8;
        Self {
            sig: self.sig,
            bits: self.bits ^ all,
        }
    }

    pub fn apply<S: Scalar>(&self, a: &Multivector<S>) -> Multivector<S> {
        assert_eq!(
            self.sig,
            a.sig(),
            "signature mismatch: map over {} applied to {}",
            self.sig,
            a.sig()
        );
        let coeffs = a
            .coeffs()
            .iter()
            .enumerate()
            .map(|(mask, c)| {
                if self.negates(mask.count_ones()) {
                    -c.clone()
                } else {
                    c.clone()
                }
            })
            .collect();
        Multivector::from_coeffs(self.sig, coeffs)
    }
}

impl fmt::Display for GradeNegationMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.negated_grades().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

/// Negate the components of `a` whose grade the map lists.
pub fn grade_negate<S: Scalar>(a: &Multivector<S>, m: &GradeNegationMap) -> Multivector<S> {
    m.apply(a)
}

/// Clifford conjugate ā of `a`.
pub fn clifford_conjugate<S: Scalar>(a: &Multivector<S>) -> Multivector<S> {
    GradeNegationMap::clifford_conjugation(a.sig()).apply(a)
}

/// True iff `s` commutes with every generator (and hence, since blades are
/// generator products, with the whole algebra). Exact fields compare
/// exactly; floats allow a small relative slack.
pub fn is_central<S: Scalar>(s: &Multivector<S>) -> bool {
    let sig = s.sig();
    sig.generator_masks().all(|g| {
        let e = Multivector::<S>::basis_blade(sig, g);
        let left = e.geometric_product(s);
        let right = s.geometric_product(&e);
        if S::EXACT {
            left == right
        } else {
            let diff = left - right;
            diff.coeff_max_abs() <= DEFAULT_TOLERANCE * (1.0 + s.coeff_max_abs())
        }
    })
}

/// Cen₁ = a + σ(a). Central for suitable σ only; callers verify.
pub fn cen1<S: Scalar>(a: &Multivector<S>, m: &GradeNegationMap) -> Multivector<S> {
    a + &m.apply(a)
}

/// Cen₂ = a · σ(a). Central for suitable σ only; callers verify.
pub fn cen2<S: Scalar>(a: &Multivector<S>, m: &GradeNegationMap) -> Multivector<S> {
    a * &m.apply(a)
}

/// Blades spanning the center of Cl(p,q), found by checking every basis
/// blade against the generators rather than assuming the parity rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterBasis {
    sig: Signature,
    blades: Vec<BladeIndex>,
}

impl CenterBasis {
    pub fn compute(sig: Signature) -> Self {
        let blades = sig
            .blade_masks()
            .filter(|&m| is_central(&Multivector::<Rational>::basis_blade(sig, m)))
            .map(BladeIndex::new)
            .collect();
        Self { sig, blades }
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn blades(&self) -> &[BladeIndex] {
        &self.blades
    }

    pub fn contains(&self, mask: usize) -> bool {
        self.blades.iter().any(|b| b.mask() == mask)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cl(p: u32, q: u32) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn mv(sig: Signature, terms: &[(usize, i64)]) -> Multivector<Rational> {
        Multivector::from_terms(sig, terms)
    }

    #[test]
    fn grade_negation_flips_listed_grades() {
        let sig = cl(3, 0);
        let b = mv(sig, &[(0, 3), (2, 2), (4, 3), (7, 2)]);
        let m = GradeNegationMap::new(sig, &[1, 2]).unwrap();
        assert_eq!(m.apply(&b), mv(sig, &[(0, 3), (2, -2), (4, -3), (7, 2)]));
    }

    #[test]
    fn applying_twice_is_the_identity() {
        let sig = cl(2, 1);
        let a = mv(sig, &[(0, 1), (1, -4), (3, 2), (5, 9), (7, -3)]);
        for bits in 0..(2u16 << sig.n()) {
            let m = GradeNegationMap::from_bit_mask(sig, bits);
            assert_eq!(m.apply(&m.apply(&a)), a);
        }
    }

    #[test]
    fn scalars_survive_maps_without_grade_zero() {
        let sig = cl(2, 0);
        let s = mv(sig, &[(0, 7)]);
        let m = GradeNegationMap::new(sig, &[1, 2]).unwrap();
        assert_eq!(m.apply(&s), s);
    }

    #[test]
    fn rejects_grades_beyond_dimension() {
        let sig = cl(1, 0);
        assert_eq!(
            GradeNegationMap::new(sig, &[2]),
            Err(InvolutionError::GradeOutOfRange { grade: 2, sig })
        );
    }

    #[test]
    fn conjugation_negates_grades_one_and_two() {
        let sig = cl(3, 0);
        let a = mv(sig, &[(0, 3), (1, 3), (5, 2), (7, 5)]);
        let conj = clifford_conjugate(&a);
        assert_eq!(conj, mv(sig, &[(0, 3), (1, -3), (5, -2), (7, 5)]));
        // Cross-check against the Cl(3,0) center formula: a+ā = 2(a₀+a₁₂₃I₃).
        assert_eq!(&a + &conj, mv(sig, &[(0, 6), (7, 10)]));

        let scalar = mv(sig, &[(0, 11)]);
        assert_eq!(clifford_conjugate(&scalar), scalar);
    }

    #[test]
    fn conjugation_general_rule_by_grade_mod_four() {
        let sig = cl(3, 3);
        let m = GradeNegationMap::clifford_conjugation(sig);
        assert_eq!(m.negated_grades(), vec![1, 2, 5, 6]);
    }

    #[test]
    fn quaternion_inverse_via_conjugate() {
        // In Cl(0,2), a⁻¹ = ā/(aā) with aā a positive scalar.
        let sig = cl(0, 2);
        let a = mv(sig, &[(0, 1), (1, 2), (2, -1), (3, 3)]);
        let conj = clifford_conjugate(&a);
        let norm = &a * &conj;
        assert_eq!(norm, mv(sig, &[(0, 15)]));
        let inv = conj.scale(&norm.scalar_part().try_recip().unwrap());
        assert_eq!(&a * &inv, Multivector::one(sig));
    }

    #[test]
    fn centrality_of_scalars_pseudoscalars_and_not_vectors() {
        assert!(is_central(&mv(cl(2, 1), &[(0, 5)])));
        assert!(is_central(&mv(cl(3, 0), &[(7, 1)])));
        assert!(!is_central(&mv(cl(2, 0), &[(1, 1)])));
    }

    #[test]
    fn cen2_matches_quaternion_norm_in_cl02() {
        let sig = cl(0, 2);
        let m = GradeNegationMap::new(sig, &[1, 2]).unwrap();
        let a = mv(sig, &[(0, 2), (1, -3), (2, 5), (3, 7)]);
        // a₀²+a₁²+a₂²+a₃² = 4+9+25+49
        assert_eq!(cen2(&a, &m), mv(sig, &[(0, 87)]));
    }

    #[test]
    fn cen2_carries_metric_signs_in_cl11() {
        let sig = cl(1, 1);
        let m = GradeNegationMap::new(sig, &[1, 2]).unwrap();
        let a = mv(sig, &[(0, 2), (1, 3), (2, 5), (3, 7)]);
        // a₀²−a₁²+a₂²−a₃² = 4−9+25−49
        assert_eq!(cen2(&a, &m), mv(sig, &[(0, -29)]));
    }

    #[test]
    fn cen1_on_worked_values() {
        let sig = cl(3, 0);
        let m = GradeNegationMap::new(sig, &[1, 2]).unwrap();
        let a = mv(sig, &[(0, 3), (1, 3), (5, 2), (7, 5)]);
        assert_eq!(cen1(&a, &m), mv(sig, &[(0, 6), (7, 10)]));
    }

    #[test]
    fn center_basis_is_scalar_plus_odd_pseudoscalar() {
        for n in 1..=6u32 {
            for sig in Signature::all_with_dimension(n) {
                let basis = CenterBasis::compute(sig);
                let masks: Vec<usize> = basis.blades().iter().map(|b| b.mask()).collect();
                if n % 2 == 1 {
                    assert_eq!(masks, vec![0, sig.pseudoscalar_mask()], "{sig}");
                } else {
                    assert_eq!(masks, vec![0], "{sig}");
                }
            }
        }
    }

    #[test]
    fn conjugation_antiautomorphism_on_vectors() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 1..=3u32 {
            for sig in Signature::all_with_dimension(n) {
                for _ in 0..20 {
                    let vec_terms = |rng: &mut rand::rngs::StdRng| {
                        let terms: Vec<(usize, i64)> = (0..n)
                            .map(|k| (1usize << k, rng.gen_range(-9..=9)))
                            .collect();
                        Multivector::<Rational>::from_terms(sig, &terms)
                    };
                    let a = vec_terms(&mut rng);
                    let b = vec_terms(&mut rng);
                    let lhs = clifford_conjugate(&(&a * &b));
                    let rhs = clifford_conjugate(&b) * clifford_conjugate(&a);
                    assert_eq!(lhs, rhs, "{sig}");
                }
            }
        }
    }

    #[test]
    fn complement_realises_global_sign_flip() {
        let sig = cl(2, 2);
        let a = mv(sig, &[(0, 1), (3, -2), (9, 4), (15, 5)]);
        for bits in 0..(2u16 << sig.n()) {
            let m = GradeNegationMap::from_bit_mask(sig, bits);
            assert_eq!(m.complement().apply(&a), -m.apply(&a));
        }
    }
}
