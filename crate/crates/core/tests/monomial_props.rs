mod common;

use proptest::prelude::*;

use semistar_core::monomial::{associated_primes, monomial_primary_decomposition, MonomialIdeal};
use semistar_core::rings::{Ideal, PresentedRing};
use semistar_core::sample;
use semistar_core::Field;

fn monomial_ideal(max_gens: usize, max_degree: u32) -> impl Strategy<Value = MonomialIdeal> {
    any::<u64>().prop_map(move |seed| sample::random_monomial_ideal(&mut sample::rng(seed), 3, max_gens, max_degree))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn generators_are_minimal(m in monomial_ideal(4, 5)) {
        let gens = m.generators();
        for (i, a) in gens.iter().enumerate() {
            for (j, b) in gens.iter().enumerate() {
                prop_assert!(i == j || !a.divides(b));
            }
        }
        for mono in sample::monomials_up_to(3, 6) {
            prop_assert_eq!(m.contains(&mono), common::divisible(gens, &mono));
        }
    }

    #[test]
    fn decomposition_intersects_back(m in monomial_ideal(4, 5)) {
        let r = PresentedRing::polynomial_ring(Field::Rational, &["x", "y", "z"]).unwrap();
        let d = monomial_primary_decomposition(&r, &m).unwrap();
        prop_assert!(d.is_verified());
        let mut acc = r.unit_ideal();
        for c in d.components() {
            acc = acc.intersect(&c.primary).unwrap();
            prop_assert!(c.primary.lift_monomial().unwrap().is_primary());
            prop_assert!(c.prime.lift_monomial().unwrap().is_prime());
        }
        prop_assert_eq!(acc, Ideal::from_monomials(&r, &m).unwrap());
        let ass = associated_primes(&d).unwrap();
        for (k, p) in ass.iter().enumerate() {
            prop_assert!(!ass[..k].contains(p));
        }
    }

    #[test]
    fn radical_membership_matches_rabinowitsch(m in monomial_ideal(3, 4)) {
        let r = PresentedRing::polynomial_ring(Field::Rational, &["x", "y", "z"]).unwrap();
        let i = Ideal::from_monomials(&r, &m).unwrap();
        let rad = m.radical();
        for mono in sample::monomials_up_to(3, 6) {
            prop_assert_eq!(rad.contains(&mono), i.radical_contains(&r.monomial(&mono)).unwrap());
        }
    }

    #[test]
    fn integral_closure_properties(m in monomial_ideal(3, 6)) {
        let bar = m.integral_closure();
        prop_assert!(bar.contains_ideal(&m));
        prop_assert_eq!(&bar.integral_closure(), &bar);
        prop_assert_eq!(bar.radical(), m.radical());
        for mono in sample::monomials_up_to(3, 6) {
            prop_assert_eq!(bar.contains(&mono), common::integral_by_powers(&m, &mono, 6));
        }
    }
}

#[test]
fn named_decompositions() {
    let r = PresentedRing::polynomial_ring(Field::Rational, &["x", "y", "z"]).unwrap();
    let parse = |gens: &[&str]| r.ideal(gens).unwrap().lift_monomial().unwrap();
    let d = monomial_primary_decomposition(&r, &parse(&["x^2", "x*y"])).unwrap();
    let primes: Vec<String> = associated_primes(&d).unwrap().iter().map(|p| p.to_string()).collect();
    assert_eq!(primes, ["(x)", "(x, y)"]);
    let d = monomial_primary_decomposition(&r, &parse(&["x", "y*z"])).unwrap();
    let comps: Vec<String> = d.components().iter().map(|c| c.primary.to_string()).collect();
    assert_eq!(comps, ["(x, y)", "(x, z)"]);
    let d = monomial_primary_decomposition(&r, &parse(&["x", "z"])).unwrap();
    assert_eq!(d.components().len(), 1);
}
