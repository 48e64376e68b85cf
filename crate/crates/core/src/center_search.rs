//! Exhaustive search over grade-negation involutions σ of Cl(p,q), deciding
//! symbolically whether a+σ(a) and a·σ(a) are central for every a.
//!
//! The cen₁ condition is linear: blade β survives in a+σ(a) exactly when σ
//! does not negate its grade, so the condition holds iff every surviving
//! blade commutes with the generators. The cen₂ condition is quadratic: the
//! commutator (a·σ(a))·eᵢ − eᵢ·(a·σ(a)) is expanded per blade as a
//! quadratic form in the symbolic coefficients of a, and centrality for all
//! a is equivalent to every monomial coefficient vanishing. That makes the
//! verdict a proof over the rationals, not a sampled guess; sampling is
//! kept in the test suite as a cross-check of this engine.
//!
//! Only grade-sign patterns are searched (all 2^(n+1) of them, grade 0
//! included); richer involution classes are out of scope and the reports
//! say so. A pattern and its grade-set complement differ by a global sign,
//! so they pass or fail cen₂ together; both are still listed.

use crate::blade::product_table;
use crate::involution::GradeNegationMap;
use crate::signature::Signature;

/// Fixed description of the searched involution class, embedded in every
/// report for downstream consumers.
pub const SEARCH_SPACE: &str = "grade-negation involutions (all 2^(n+1) grade-sign patterns, grade 0 included)";

/// Note on the complement symmetry, embedded in every report.
pub const SIGN_FLIP_NOTE: &str = "a pattern and its grade-set complement give globally opposite maps, hence identical a*sigma(a) up to sign; both are listed";

/// One surviving monomial of a commutator quadratic form: the coefficient
/// of a_j·a_k in the blade-`blade_mask` component of
/// (a·σ(a))·e_generator − e_generator·(a·σ(a)).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CommutatorTerm {
    /// 1-indexed generator the commutator was taken against.
    pub generator: u32,
    pub blade_mask: usize,
    /// Unordered monomial (j ≤ k) over blade coefficient indices.
    pub monomial: (usize, usize),
    pub coefficient: i64,
}

/// Symbolic evidence for (or against) centrality of a·σ(a) for all a:
/// the list of monomials that do NOT cancel. Empty list ⇔ central for
/// every a, as an exact polynomial identity.
#[derive(Clone, Debug)]
pub struct QuadraticFormCertificate {
    pub sigma: GradeNegationMap,
    pub nonzero_terms: Vec<CommutatorTerm>,
}

impl QuadraticFormCertificate {
    pub fn is_identically_zero(&self) -> bool {
        self.nonzero_terms.is_empty()
    }
}

/// True iff a+σ(a) lies in the center for every a. Linear, hence decided
/// blade by blade: every surviving blade must commute with the generators.
pub fn check_cen1(sig: Signature, sigma: &GradeNegationMap) -> bool {
    assert_eq!(sig, sigma.sig(), "signature mismatch");
    let table = product_table(sig);
    sig.blade_masks().all(|m| {
        sigma.negates(m.count_ones())
            || sig
                .generator_masks()
                .all(|e| table.sign(m, e) == table.sign(e, m))
    })
}

/// Decide centrality of a·σ(a) for all a via the symbolic quadratic forms,
/// returning the certificate for auditing.
pub fn check_cen2(sig: Signature, sigma: &GradeNegationMap) -> (bool, QuadraticFormCertificate) {
    assert_eq!(sig, sigma.sig(), "signature mismatch");
    let table = product_table(sig);
    let nb = sig.blade_count();
    let mut nonzero_terms = Vec::new();

    // a·σ(a) = Σ_{j,k} sign(j,k)·σ(grade k)·a_j·a_k·blade(j^k); commuting a
    // fixed generator past blade m both ways costs sign(m,e) vs sign(e,m),
    // so every (j,k) pair contributes to exactly one monomial and blade.
    let mut acc = vec![0i64; nb * nb];
    for (gi, e) in sig.generator_masks().enumerate() {
        acc.fill(0);
        for j in 0..nb {
            for k in 0..nb {
                let m = j ^ k;
                let d = table.sign(m, e) - table.sign(e, m);
                if d == 0 {
                    continue;
                }
                let c = table.sign(j, k) * sigma.sign(k.count_ones());
                let (lo, hi) = if j <= k { (j, k) } else { (k, j) };
                acc[lo * nb + hi] += (c * d) as i64;
            }
        }
        for lo in 0..nb {
            for hi in lo..nb {
                let coefficient = acc[lo * nb + hi];
                if coefficient != 0 {
                    nonzero_terms.push(CommutatorTerm {
                        generator: gi as u32 + 1,
                        blade_mask: lo ^ hi ^ e,
                        monomial: (lo, hi),
                        coefficient,
                    });
                }
            }
        }
    }

    let central = nonzero_terms.is_empty();
    (central, QuadraticFormCertificate { sigma: *sigma, nonzero_terms })
}

/// Search outcome for one signature: which grade-sign patterns make
/// a+σ(a) central for all a, and which additionally make a·σ(a) central.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub sig: Signature,
    pub candidates_total: usize,
    pub search_space: &'static str,
    pub sign_flip_note: &'static str,
    pub cen1_only: Vec<GradeNegationMap>,
    pub both_centers: Vec<GradeNegationMap>,
}

impl SearchReport {
    /// The canonical conjugation pattern appears among the full solutions.
    pub fn conjugation_solves_both(&self) -> bool {
        let conj = GradeNegationMap::clifford_conjugation(self.sig);
        self.both_centers.contains(&conj)
    }
}

fn assemble(sig: Signature, checked: Vec<(GradeNegationMap, bool, bool)>) -> SearchReport {
    let mut cen1_only = Vec::new();
    let mut both_centers = Vec::new();
    // `checked` arrives ordered by grade-sign bit pattern, which is the
    // report's canonical order.
    for (sigma, c1, c2) in checked {
        if c1 {
            cen1_only.push(sigma);
        }
        if c1 && c2 {
            both_centers.push(sigma);
        }
    }
    SearchReport {
        sig,
        candidates_total: 2usize << sig.n(),
        search_space: SEARCH_SPACE,
        sign_flip_note: SIGN_FLIP_NOTE,
        cen1_only,
        both_centers,
    }
}

fn check_candidate(sig: Signature, bits: u16) -> (GradeNegationMap, bool, bool) {
    let sigma = GradeNegationMap::from_bit_mask(sig, bits);
    let c1 = check_cen1(sig, &sigma);
    let c2 = check_cen2(sig, &sigma).0;
    (sigma, c1, c2)
}

/// Exhaustively classify all 2^(n+1) grade-sign patterns. Candidates are
/// independent, so the `parallel` feature fans them out over rayon; the
/// report order is deterministic either way.
pub fn search(sig: Signature) -> SearchReport {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let total = 2u16 << sig.n();
        let checked: Vec<_> = (0..total)
            .into_par_iter()
            .map(|bits| check_candidate(sig, bits))
            .collect();
        assemble(sig, checked)
    }
    #[cfg(not(feature = "parallel"))]
    {
        search_sequential(sig)
    }
}

/// Sequential search path, always available; benchmarks compare the two.
pub fn search_sequential(sig: Signature) -> SearchReport {
    let total = 2u16 << sig.n();
    let checked: Vec<_> = (0..total).map(|bits| check_candidate(sig, bits)).collect();
    assemble(sig, checked)
}
