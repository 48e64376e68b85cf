//! Property-based checks of the algebraic identities, all in exact rational
//! arithmetic so every assertion is an equality, not an approximation.

use proptest::prelude::*;

use clifford_sylvester::center_search::check_cen2;
use clifford_sylvester::involution::{
    cen1, cen2, clifford_conjugate, grade_negate, is_central, GradeNegationMap,
};
use clifford_sylvester::oracle::{oracle_solve, OracleStatus};
use clifford_sylvester::sylvester::{residual, solve, solve_formula_a, solve_formula_b, MethodPolicy};
use clifford_sylvester::table1::TABLE1;
use clifford_sylvester::{Multivector, Rational, Scalar, Signature};

fn all_signatures(max_n: u32) -> Vec<Signature> {
    (1..=max_n).flat_map(Signature::all_with_dimension).collect()
}

fn arb_sig(max_n: u32) -> impl Strategy<Value = Signature> {
    prop::sample::select(all_signatures(max_n))
}

fn mv_for(sig: Signature) -> impl Strategy<Value = Multivector<Rational>> {
    prop::collection::vec(-9i64..=9, sig.blade_count()).prop_map(move |cs| {
        let terms: Vec<(usize, i64)> = cs.into_iter().enumerate().collect();
        Multivector::from_terms(sig, &terms)
    })
}

fn sig_and_triple(
    max_n: u32,
) -> impl Strategy<Value = (Signature, Multivector<Rational>, Multivector<Rational>, Multivector<Rational>)>
{
    arb_sig(max_n)
        .prop_flat_map(|sig| (Just(sig), mv_for(sig), mv_for(sig), mv_for(sig)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative((_, a, b, c) in sig_and_triple(6)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn product_distributes_over_addition((_, a, b, c) in sig_and_triple(6)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn grade_negation_maps_are_involutions(
        (sig, a, _, _) in sig_and_triple(6),
        bits in 0u16..128,
    ) {
        let m = GradeNegationMap::from_bit_mask(sig, bits % (2 << sig.n()));
        prop_assert_eq!(grade_negate(&grade_negate(&a, &m), &m), a);
    }

    #[test]
    fn conjugation_reverses_products_of_vectors((_sig, a, b, _) in sig_and_triple(3)) {
        let va = a.grade_part(1);
        let vb = b.grade_part(1);
        prop_assert_eq!(
            clifford_conjugate(&(&va * &vb)),
            clifford_conjugate(&vb) * clifford_conjugate(&va)
        );
    }

    #[test]
    fn solutions_satisfy_the_equation_exactly((_, a, b, c) in sig_and_triple(3)) {
        let out = solve(&a, &b, &c, MethodPolicy::Auto);
        if let Some(x) = &out.solution {
            prop_assert!(residual(&a, &b, &c, x).is_zero());
        }
    }

    #[test]
    fn closed_forms_never_contradict_the_oracle((_, a, b, c) in sig_and_triple(3)) {
        for out in [solve_formula_a(&a, &b, &c), solve_formula_b(&a, &b, &c)] {
            if let Some(x) = &out.solution {
                let oracle = oracle_solve(&a, &b, &c);
                prop_assert_eq!(oracle.status, OracleStatus::Unique);
                prop_assert_eq!(&oracle.particular.unwrap(), x);
            }
        }
    }

    #[test]
    fn symbolic_cen2_verdict_matches_sampling(
        (sig, a, b, _) in sig_and_triple(4),
        bits in 0u16..32,
    ) {
        let sigma = GradeNegationMap::from_bit_mask(sig, bits % (2 << sig.n()));
        let (verdict, _) = check_cen2(sig, &sigma);
        if verdict {
            prop_assert!(is_central(&cen2(&a, &sigma)));
            prop_assert!(is_central(&cen2(&b, &sigma)));
        }
    }
}

#[test]
fn generators_anticommute_and_square_to_the_metric() {
    for sig in all_signatures(6) {
        let gens: Vec<Multivector<Rational>> = sig
            .generator_masks()
            .map(|m| Multivector::basis_blade(sig, m))
            .collect();
        for (i, ei) in gens.iter().enumerate() {
            let square = ei * ei;
            let expected =
                Multivector::scalar(sig, Rational::from_i64(sig.generator_square(i as u32 + 1).into()));
            assert_eq!(square, expected, "{sig}: e{} squared", i + 1);
            for ej in gens.iter().skip(i + 1) {
                assert_eq!(ei * ej, -(ej * ei), "{sig}: anticommutation");
            }
        }
    }
}

#[test]
fn conjugation_centers_are_central_in_all_seven_algebras() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(1000);
    for row in &TABLE1 {
        let sig = row.sig();
        let m = GradeNegationMap::new(sig, &[1, 2]).unwrap();
        for _ in 0..1000 {
            let terms: Vec<(usize, i64)> =
                sig.blade_masks().map(|k| (k, rng.gen_range(-9..=9))).collect();
            let a = Multivector::<Rational>::from_terms(sig, &terms);
            assert!(is_central(&cen1(&a, &m)), "{sig}");
            assert!(is_central(&cen2(&a, &m)), "{sig}");
        }
    }
}
