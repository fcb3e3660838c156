mod common;

use proptest::prelude::*;

use semistar_core::groebner::{normal_form, reduced_groebner_basis, reduced_groebner_basis_with_stats};
use semistar_core::poly::{parse_polynomial, Monomial, MonomialOrder, PolyContext, Polynomial};
use semistar_core::sample;
use semistar_core::Field;

fn names(n: usize) -> Vec<String> {
    ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect()
}

fn poly(ctx: PolyContext, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, ctx.nvars), -6i64..=6), 0..=max_terms).prop_map(
        move |terms| {
            Polynomial::from_terms(
                ctx,
                terms.into_iter().map(|(e, c)| (Monomial::new(e), ctx.field.from_i64(c))).collect(),
            )
        },
    )
}

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..5, n).prop_map(Monomial::new)
}

fn qq3() -> PolyContext {
    PolyContext::new(3, Field::Rational, MonomialOrder::Grevlex)
}

fn f101(n: usize) -> PolyContext {
    PolyContext::new(n, Field::prime(101).unwrap(), MonomialOrder::Grevlex)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(f in poly(qq3(), 3, 5), g in poly(qq3(), 3, 5), h in poly(qq3(), 3, 5)) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }
}

proptest! {
    #[test]
    fn orders_are_multiplicative(a in monomial(3), b in monomial(3), m in monomial(3)) {
        for order in [MonomialOrder::Lex, MonomialOrder::Grevlex, MonomialOrder::Elimination(1)] {
            let one = Monomial::one(3);
            prop_assert!(order.cmp(&one, &a) != std::cmp::Ordering::Greater);
            prop_assert_eq!(order.cmp(&a, &b), order.cmp(&a.mul(&m), &b.mul(&m)));
        }
    }

    #[test]
    fn canonical_form_is_idempotent(f in poly(qq3(), 4, 6)) {
        let again = Polynomial::from_terms(f.ctx(), f.terms().to_vec());
        prop_assert_eq!(&again, &f);
        prop_assert!(f.terms().windows(2).all(|w| f.order().cmp(&w[0].0, &w[1].0) == std::cmp::Ordering::Greater));
    }

    #[test]
    fn print_parse_round_trip(f in poly(qq3(), 4, 6)) {
        let text = f.display(&names(3)).to_string();
        prop_assert_eq!(parse_polynomial(&text, &names(3), f.ctx()).unwrap(), f);
    }

    #[test]
    fn residues_stay_reduced(f in poly(f101(2), 3, 5), g in poly(f101(2), 3, 5)) {
        for (_, c) in (&f * &g).terms() {
            let reduced = matches!(c, semistar_core::Scalar::Residue { value, modulus: 101 } if *value < 101 && *value > 0);
            prop_assert!(reduced);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent(gens in prop::collection::vec(poly(f101(3), 3, 4), 1..4), f in poly(f101(3), 4, 6)) {
        let gb = reduced_groebner_basis(f.ctx(), &gens).unwrap();
        let r = normal_form(&f, &gb).unwrap();
        prop_assert_eq!(normal_form(&r, &gb).unwrap(), r.clone());
        prop_assert!(gb.contains(&(&f - &r)));
    }

    #[test]
    fn basis_is_order_independent(gens in prop::collection::vec(poly(qq3(), 2, 3), 1..4), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let gb = reduced_groebner_basis(qq3(), &gens).unwrap();
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut sample::rng(seed));
        prop_assert_eq!(reduced_groebner_basis(qq3(), &shuffled).unwrap(), gb.clone());
        let lms: Vec<&Monomial> = gb.generators().iter().map(|g| g.lm()).collect();
        prop_assert!(lms.windows(2).all(|w| MonomialOrder::Grevlex.cmp(w[0], w[1]) == std::cmp::Ordering::Less));
        for (i, g) in gb.generators().iter().enumerate() {
            prop_assert!(g.lc().is_one());
            for (j, h) in gb.generators().iter().enumerate() {
                if i != j {
                    prop_assert!(g.terms().iter().all(|(m, _)| !h.lm().divides(m)));
                }
            }
        }
    }

    #[test]
    fn buchberger_stays_bounded(gens in prop::collection::vec(poly(f101(3), 3, 4), 1..4)) {
        let (_, stats) = reduced_groebner_basis_with_stats(f101(3), &gens).unwrap();
        prop_assert!(stats.pairs_created < 20_000, "{:?}", stats);
    }

    #[test]
    fn membership_matches_linear_algebra(gens in prop::collection::vec(poly(f101(2), 3, 3), 1..3),
                                         mults in prop::collection::vec(poly(f101(2), 2, 3), 2),
                                         f in poly(f101(2), 4, 4)) {
        let gb = reduced_groebner_basis(f101(2), &gens).unwrap();
        let mut member = Polynomial::zero(f101(2));
        for (g, h) in gens.iter().zip(&mults) {
            member = &member + &(g * h);
        }
        prop_assert!(gb.contains(&member));
        prop_assert!(common::span_contains(&gens, &member, 12));
        if common::span_contains(&gens, &f, 12) {
            prop_assert!(gb.contains(&f));
        }
        if !gb.contains(&f) {
            prop_assert!(!common::span_contains(&gens, &f, 12));
        }
    }
}
