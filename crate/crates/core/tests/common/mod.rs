//! Test oracles that do not go through Gröbner bases or linear programming.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;

use semistar_core::monomial::MonomialIdeal;
use semistar_core::poly::{Monomial, PolyContext, Polynomial};
use semistar_core::rings::{Ideal, RingElement};
use semistar_core::sample::{self, SampleRng};
use semistar_core::{Field, Scalar};

/// A random polynomial with up to `max_terms` terms of degree at most
/// `max_degree` and small coefficients.
pub fn random_poly(rng: &mut SampleRng, ctx: PolyContext, max_degree: u32, max_terms: usize) -> Polynomial {
    let k = rng.gen_range(1..=max_terms);
    let terms = (0..k)
        .map(|_| {
            let m = if rng.gen_bool(0.15) {
                Monomial::one(ctx.nvars)
            } else {
                sample::random_monomial(rng, ctx.nvars, max_degree)
            };
            let c = ctx.field.from_i64(rng.gen_range(-5..=5));
            (m, c)
        })
        .collect();
    Polynomial::from_terms(ctx, terms)
}

fn residue(s: &Scalar) -> u64 {
    match s {
        Scalar::Residue { value, .. } => *value as u64,
        Scalar::Rational(_) => panic!("the linear-algebra oracle works over prime fields"),
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut result = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Whether `f` lies in the `F_p`-span of `{m g : deg(m g) <= d}`: a
/// certificate of membership in `(gens)` with every product of degree at
/// most `d`.
pub fn span_contains(gens: &[Polynomial], f: &Polynomial, d: u32) -> bool {
    let ctx = f.ctx();
    let p = match ctx.field {
        Field::Prime(p) => p as u64,
        Field::Rational => panic!("prime field expected"),
    };
    if f.total_degree() > d && !f.is_zero() {
        return false;
    }
    let monos = sample::monomials_up_to(ctx.nvars, d);
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let vector = |h: &Polynomial| {
        let mut v = vec![0u64; monos.len()];
        for (m, c) in h.terms() {
            v[index[m]] = residue(c);
        }
        v
    };
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    let reduce = |mut v: Vec<u64>, pivots: &[(usize, Vec<u64>)]| {
        for (col, row) in pivots {
            let c = v[*col];
            if c != 0 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a = (*a + p - c * b % p) % p;
                }
            }
        }
        v
    };
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.total_degree();
        if dg > d {
            continue;
        }
        for m in sample::monomials_up_to(ctx.nvars, d - dg) {
            let row = reduce(vector(&g.mul_term(&m, &ctx.field.one())), &pivots);
            if let Some(col) = row.iter().position(|&c| c != 0) {
                let inv = inv_mod(row[col], p);
                let row: Vec<u64> = row.iter().map(|&c| c * inv % p).collect();
                for (_, other) in pivots.iter_mut() {
                    let c = other[col];
                    if c != 0 {
                        for (a, b) in other.iter_mut().zip(&row) {
                            *a = (*a + p - c * b % p) % p;
                        }
                    }
                }
                pivots.push((col, row));
            }
        }
    }
    reduce(vector(f), &pivots).iter().all(|&c| c == 0)
}

/// Some `f^n` with `n <= max_n` lies in `i`.
pub fn power_certificate(i: &Ideal, f: &RingElement, max_n: u32) -> Option<u32> {
    (1..=max_n).find(|&n| i.contains(&f.pow(n)).unwrap())
}

/// `m^k ∈ I^k` for some `k <= max_k`, by divisibility only.
pub fn integral_by_powers(i: &MonomialIdeal, m: &Monomial, max_k: u32) -> bool {
    (1..=max_k).any(|k| i.power(k).contains(&m.pow(k)))
}

/// Membership in a monomial ideal by divisibility.
pub fn divisible(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}
