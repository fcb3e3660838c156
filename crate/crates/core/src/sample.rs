//! Seeded random samples used by the axiom and correspondence checkers.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::monomial::MonomialIdeal;
use crate::poly::Monomial;

pub use rand::SeedableRng;
pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonconstant monomial of total degree at most `max_degree`.
pub fn random_monomial(rng: &mut SampleRng, nvars: usize, max_degree: u32) -> Monomial {
    let target = rng.gen_range(1..=max_degree.max(1));
    let mut exps = vec![0u32; nvars];
    for _ in 0..target {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::new(exps)
}

/// A monomial of total degree at most `max_degree`, possibly `1`.
pub fn random_multiplier(rng: &mut SampleRng, nvars: usize, max_degree: u32) -> Monomial {
    if max_degree == 0 || rng.gen_bool(0.3) {
        Monomial::one(nvars)
    } else {
        random_monomial(rng, nvars, max_degree)
    }
}

/// A proper nonzero monomial ideal with between one and `max_gens`
/// generators, each of degree at most `max_degree`.
pub fn random_monomial_ideal(rng: &mut SampleRng, nvars: usize, max_gens: usize, max_degree: u32) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens.max(1));
    let gens = (0..k).map(|_| random_monomial(rng, nvars, max_degree)).collect();
    MonomialIdeal::new(nvars, gens)
}

/// A monomial ideal contained in `ideal`: every generator is multiplied by a
/// random monomial, and some generators are dropped.
pub fn random_subideal(rng: &mut SampleRng, ideal: &MonomialIdeal, max_degree: u32) -> MonomialIdeal {
    let n = ideal.nvars();
    let mut gens = Vec::new();
    for g in ideal.generators() {
        if rng.gen_bool(0.7) {
            gens.push(g.mul(&random_multiplier(rng, n, max_degree)));
        }
    }
    if gens.is_empty() {
        let g = &ideal.generators()[rng.gen_range(0..ideal.generators().len())];
        gens.push(g.mul(&random_multiplier(rng, n, max_degree)));
    }
    MonomialIdeal::new(n, gens)
}

/// All monomials in `nvars` variables of total degree at most `max_degree`,
/// ordered by degree.
pub fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let mut exps = vec![0u32; nvars];
        compositions(d, 0, &mut exps, &mut out);
    }
    out
}

fn compositions(left: u32, i: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i + 1 == exps.len() {
        exps[i] = left;
        out.push(Monomial::new(exps.clone()));
        return;
    }
    for e in (0..=left).rev() {
        exps[i] = e;
        compositions(left - e, i + 1, exps, out);
    }
    exps[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_up_to(3, 6).len(), 84);
        assert_eq!(monomials_up_to(2, 2).len(), 6);
        assert_eq!(monomials_up_to(1, 0).len(), 1);
    }

    #[test]
    fn samples_are_reproducible_and_bounded() {
        let a = random_monomial_ideal(&mut rng(7), 3, 4, 5);
        let b = random_monomial_ideal(&mut rng(7), 3, 4, 5);
        assert_eq!(a, b);
        assert!(a.generators().iter().all(|g| (1..=5).contains(&g.degree())));
        let mut r = rng(11);
        for _ in 0..50 {
            let i = random_monomial_ideal(&mut r, 3, 4, 5);
            let j = random_subideal(&mut r, &i, 2);
            assert!(i.contains_ideal(&j));
        }
    }
}
