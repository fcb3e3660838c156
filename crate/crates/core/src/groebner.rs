//! Buchberger's algorithm, normal forms and elimination.
//!
//! Pairs are processed by the normal strategy (smallest lcm first) with
//! Buchberger's product and chain criteria. The output is the reduced basis:
//! monic, inter-reduced, sorted ascending by leading monomial, so two
//! computations of the same ideal are bit-identical.

use crate::error::PolyError;
use crate::poly::{Monomial, MonomialOrder, PolyContext, Polynomial};

/// A reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroebnerBasis {
    ctx: PolyContext,
    gens: Vec<Polynomial>,
}

/// Counters collected while running Buchberger's algorithm.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_created: usize,
    pub pairs_reduced: usize,
    pub product_criterion: usize,
    pub chain_criterion: usize,
    pub basis_growth: usize,
}

impl GroebnerBasis {
    pub fn ctx(&self) -> PolyContext {
        self.ctx
    }

    pub fn order(&self) -> MonomialOrder {
        self.ctx.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whether the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_constant()
    }

    /// Ideal membership: `f` reduces to zero.
    pub fn contains(&self, f: &Polynomial) -> bool {
        reduce(&f.with_order(self.ctx.order), &self.gens).is_zero()
    }

    /// Whether every leading monomial is a pure monomial generator, i.e.
    /// the ideal is generated by monomials.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().map(|g| g.lm().clone()).collect()
    }
}

/// The remainder of multivariate division of `f` by `g`.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial, PolyError> {
    if !f.ctx().compatible(&g.ctx) {
        return Err(PolyError::IncompatibleRing(format!(
            "polynomial in {} variables over {}, basis in {} variables over {}",
            f.nvars(),
            f.field(),
            g.ctx.nvars,
            g.ctx.field
        )));
    }
    if f.order() != g.ctx.order {
        return Err(PolyError::IncompatibleOrder(f.order(), g.ctx.order));
    }
    Ok(reduce(f, &g.gens))
}

/// Full reduction of `f` by monic divisors sharing its order.
pub(crate) fn reduce(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let ctx = f.ctx();
    let mut rest = f.clone();
    let mut remainder = Vec::new();
    while let Some((m, c)) = rest.lt().cloned() {
        match divisors.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let q = m.div(g.lm()).expect("divisible");
                let coeff = &c / g.lc();
                rest = rest.sub_mul_term(&coeff, &q, g);
            }
            None => {
                remainder.push((m, c));
                rest = rest.without_lead();
            }
        }
    }
    Polynomial::from_terms(ctx, remainder)
}

/// Reduction of the leading term only, until it is irreducible.
fn top_reduce(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let mut rest = f.clone();
    while let Some((m, c)) = rest.lt().cloned() {
        match divisors.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let q = m.div(g.lm()).expect("divisible");
                rest = rest.sub_mul_term(&(&c / g.lc()), &q, g);
            }
            None => break,
        }
    }
    rest
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let lcm = f.lm().lcm(g.lm());
    let mf = lcm.div(f.lm()).expect("lcm divisible");
    let mg = lcm.div(g.lm()).expect("lcm divisible");
    let a = f.mul_term(&mf, &f.lc().inv());
    let b = g.mul_term(&mg, &g.lc().inv());
    &a - &b
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`
/// under `ctx.order`. Zero generators are discarded; an empty list yields
/// the zero ideal.
pub fn reduced_groebner_basis(ctx: PolyContext, gens: &[Polynomial]) -> Result<GroebnerBasis, PolyError> {
    reduced_groebner_basis_with_stats(ctx, gens).map(|(g, _)| g)
}

pub fn reduced_groebner_basis_with_stats(
    ctx: PolyContext,
    gens: &[Polynomial],
) -> Result<(GroebnerBasis, BuchbergerStats), PolyError> {
    for g in gens {
        if !g.ctx().compatible(&ctx) {
            return Err(PolyError::IncompatibleRing(format!(
                "generator in {} variables over {}, expected {} over {}",
                g.nvars(),
                g.field(),
                ctx.nvars,
                ctx.field
            )));
        }
    }
    let order = ctx.order;
    let mut stats = BuchbergerStats::default();

    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    let input: Vec<Polynomial> = gens.iter().map(|g| g.with_order(order)).filter(|g| !g.is_zero()).collect();

    let add = |h: Polynomial,
               basis: &mut Vec<Polynomial>,
               pairs: &mut Vec<(usize, usize, Monomial)>,
               stats: &mut BuchbergerStats| {
        let h = h.monic();
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            pairs.push((i, k, g.lm().lcm(h.lm())));
            stats.pairs_created += 1;
        }
        basis.push(h);
    };

    for g in input {
        let h = reduce(&g, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok((unit_basis(ctx), stats));
        }
        add(h, &mut basis, &mut pairs, &mut stats);
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm, ties broken by indices
        let pos = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .cmp(&pairs[a].2, &pairs[b].2)
                    .then_with(|| (pairs[a].1, pairs[a].0).cmp(&(pairs[b].1, pairs[b].0)))
            })
            .expect("nonempty");
        let (i, j, lcm) = pairs.swap_remove(pos);

        if basis[i].lm().is_coprime(basis[j].lm()) {
            stats.product_criterion += 1;
            continue;
        }
        let pending = |a: usize, b: usize| {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            pairs.iter().any(|p| p.0 == a && p.1 == b)
        };
        let chain = (0..basis.len())
            .any(|k| k != i && k != j && basis[k].lm().divides(&lcm) && !pending(i, k) && !pending(j, k));
        if chain {
            stats.chain_criterion += 1;
            continue;
        }

        stats.pairs_reduced += 1;
        let s = s_polynomial(&basis[i], &basis[j]);
        let h = top_reduce(&s, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok((unit_basis(ctx), stats));
        }
        stats.basis_growth += 1;
        add(h, &mut basis, &mut pairs, &mut stats);
    }

    Ok((interreduce(ctx, basis), stats))
}

fn unit_basis(ctx: PolyContext) -> GroebnerBasis {
    GroebnerBasis { ctx, gens: vec![Polynomial::one(ctx)] }
}

/// Minimalizes and tail-reduces a Gröbner basis into canonical form.
fn interreduce(ctx: PolyContext, basis: Vec<Polynomial>) -> GroebnerBasis {
    let order = ctx.order;
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant =
            basis.iter().enumerate().any(|(j, h)| j != idx && h.lm().divides(g.lm()) && (h.lm() != g.lm() || j < idx));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> =
                minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
            let g = &minimal[i];
            let (lm, lc) = g.lt().cloned().expect("nonzero");
            let tail = Polynomial::from_terms(ctx, g.terms()[1..].to_vec());
            let tail = reduce(&tail, &others);
            let head = Polynomial::from_terms(ctx, vec![(lm, lc)]);
            (&head + &tail).monic()
        })
        .collect();
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    GroebnerBasis { ctx, gens: reduced }
}

/// Generators of `<gens> ∩ k[x_{k+1}, ..., x_n]`, returned as polynomials in
/// the remaining `n - k` variables under grevlex.
pub fn eliminate(gens: &[Polynomial], k: usize) -> Result<Vec<Polynomial>, PolyError> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let n = first.nvars();
    if k >= n {
        return Err(PolyError::InvalidElimination { eliminate: k, nvars: n });
    }
    let ctx = first.ctx().with_order(MonomialOrder::Elimination(k));
    let gb = reduced_groebner_basis(ctx, gens)?;
    Ok(gb
        .gens
        .iter()
        .filter(|g| !g.involves_front(k))
        .map(|g| g.drop_front(k, MonomialOrder::Grevlex).expect("free of eliminated variables"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::scalar::Field;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn polys(srcs: &[&str], vars: &[&str], order: MonomialOrder) -> (PolyContext, Vec<Polynomial>) {
        let ctx = PolyContext::new(vars.len(), Field::Rational, order);
        let n = names(vars);
        (ctx, srcs.iter().map(|s| parse_polynomial(s, &n, ctx).unwrap()).collect())
    }

    fn show(gb: &[Polynomial], vars: &[&str]) -> Vec<String> {
        let n = names(vars);
        gb.iter().map(|g| g.display(&n).to_string()).collect()
    }

    #[test]
    fn normal_forms() {
        let (ctx, g) = polys(&["x"], &["x", "y"], MonomialOrder::Grevlex);
        let gb = reduced_groebner_basis(ctx, &g).unwrap();
        let (_, f) = polys(&["x^2", "y"], &["x", "y"], MonomialOrder::Grevlex);
        assert!(normal_form(&f[0], &gb).unwrap().is_zero());
        assert_eq!(normal_form(&f[1], &gb).unwrap(), f[1]);

        let (ctx, g) = polys(&["x^2 - 1"], &["x", "y"], MonomialOrder::Lex);
        let gb = reduced_groebner_basis(ctx, &g).unwrap();
        let (_, f) = polys(&["x^2*y + y", "2*y"], &["x", "y"], MonomialOrder::Lex);
        assert_eq!(normal_form(&f[0], &gb).unwrap(), f[1]);
    }

    #[test]
    fn normal_form_rejects_order_mismatch() {
        let (ctx, g) = polys(&["x"], &["x", "y"], MonomialOrder::Lex);
        let gb = reduced_groebner_basis(ctx, &g).unwrap();
        let (_, f) = polys(&["y"], &["x", "y"], MonomialOrder::Grevlex);
        assert!(matches!(normal_form(&f[0], &gb), Err(PolyError::IncompatibleOrder(..))));
    }

    #[test]
    fn small_bases() {
        let vars = ["x", "y"];
        let (ctx, g) = polys(&["x"], &vars, MonomialOrder::Lex);
        assert_eq!(show(reduced_groebner_basis(ctx, &g).unwrap().generators(), &vars), ["x"]);

        let (ctx, g) = polys(&["x+y", "x-y"], &vars, MonomialOrder::Lex);
        assert_eq!(show(reduced_groebner_basis(ctx, &g).unwrap().generators(), &vars), ["y", "x"]);

        let (ctx, g) = polys(&["x*y-1", "y^2-1"], &vars, MonomialOrder::Lex);
        let gb = reduced_groebner_basis(ctx, &g).unwrap();
        assert_eq!(show(gb.generators(), &vars), ["y^2 - 1", "x - y"]);
        // x*y^2 - x = 0 path: x - y lies in the ideal
        let (_, f) = polys(&["x*y^2 - x", "x - y"], &vars, MonomialOrder::Lex);
        assert!(gb.contains(&f[0]) && gb.contains(&f[1]));
    }

    #[test]
    fn unit_and_zero_ideals() {
        let (ctx, g) = polys(&["x", "x + 1"], &["x"], MonomialOrder::Grevlex);
        assert!(reduced_groebner_basis(ctx, &g).unwrap().is_unit());
        let (ctx, g) = polys(&["0"], &["x"], MonomialOrder::Grevlex);
        assert!(reduced_groebner_basis(ctx, &g).unwrap().is_zero_ideal());
        assert!(reduced_groebner_basis(ctx, &[]).unwrap().is_zero_ideal());
    }

    #[test]
    fn elimination_examples() {
        let vars = ["t", "x", "y"];
        let n = names(&["x", "y"]);
        let (_, g) = polys(&["t*x - 1", "t*y"], &vars, MonomialOrder::Grevlex);
        let e = eliminate(&g, 1).unwrap();
        assert_eq!(e.iter().map(|p| p.display(&n).to_string()).collect::<Vec<_>>(), ["y"]);

        let (_, g) = polys(&["t - x"], &["t", "x"], MonomialOrder::Grevlex);
        assert!(eliminate(&g, 1).unwrap().is_empty());

        let (_, g) = polys(&["t*x", "(1-t)*y"], &vars, MonomialOrder::Grevlex);
        let e = eliminate(&g, 1).unwrap();
        assert_eq!(e.iter().map(|p| p.display(&n).to_string()).collect::<Vec<_>>(), ["x*y"]);

        assert!(matches!(eliminate(&g, 3), Err(PolyError::InvalidElimination { .. })));
    }
}
