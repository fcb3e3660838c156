//! Monomial ideals: minimal generators, radicals, primary decomposition and
//! integral closure through the Newton polyhedron.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lp;
use crate::poly::{Monomial, MonomialOrder};
use crate::rings::{Ideal, PresentedRing};

/// An ideal generated by monomials, kept as its minimal generating set
/// sorted descending in lex. No generators means the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "generator has the wrong variable count");
        }
        MonomialIdeal { nvars, gens: minimal_generators(gens) }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)] }
    }

    /// The prime generated by the listed variables.
    pub fn variables(nvars: usize, vars: &[usize]) -> Self {
        Self::new(nvars, vars.iter().map(|&i| Monomial::var(nvars, i)).collect())
    }

    /// Parses generators given as exponent vectors.
    pub fn from_exponents(nvars: usize, exps: &[&[u32]]) -> Self {
        Self::new(nvars, exps.iter().map(|e| Monomial::new(e.to_vec())).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.nvars, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.mul(b))).collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// `I^k`, with `I^0` the unit ideal.
    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.nvars);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// Generated by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b))).collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// `(I : m)`, generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.div(&g.gcd(m)).expect("gcd divides")).collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Generated by the squarefree parts of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(Monomial::squarefree_part).collect())
    }

    /// Variables occurring in some generator.
    pub fn support(&self) -> Vec<usize> {
        let mut vars: Vec<usize> = self.gens.iter().flat_map(|g| g.support()).collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    /// Monomial primary criterion: proper, and every variable occurring in a
    /// generator occurs as a pure power generator.
    pub fn is_primary(&self) -> bool {
        if self.is_unit() {
            return false;
        }
        let pure: Vec<usize> = self.gens.iter().filter_map(Monomial::pure_power_var).collect();
        self.support().iter().all(|v| pure.contains(v))
    }

    /// Prime iff generated by variables (the zero ideal included).
    pub fn is_prime(&self) -> bool {
        self.gens.iter().all(|g| g.degree() == 1)
    }

    /// Membership of `m` in the integral closure: its exponent vector lies
    /// in the Newton polyhedron `conv(generator exponents) + R_{>=0}^n`.
    pub fn integral_contains(&self, m: &Monomial) -> bool {
        if self.contains(m) {
            return true;
        }
        if self.gens.is_empty() {
            return false;
        }
        newton_feasible(&self.gens, m)
    }

    /// The integral closure, returned by minimal generators. Minimal
    /// generators of the closure lie in the box bounded by the componentwise
    /// maximum of the generator exponents.
    pub fn integral_closure(&self) -> MonomialIdeal {
        if self.gens.is_empty() || self.is_unit() {
            return self.clone();
        }
        let bound: Vec<u32> =
            (0..self.nvars).map(|i| self.gens.iter().map(|g| g.exponents()[i]).max().unwrap_or(0)).collect();
        let mut candidates = box_monomials(&bound);
        candidates.sort_by_key(Monomial::degree);
        let mut found: Vec<Monomial> = Vec::new();
        for m in candidates {
            if found.iter().any(|g| g.divides(&m)) {
                continue;
            }
            if self.integral_contains(&m) {
                found.push(m);
            }
        }
        MonomialIdeal::new(self.nvars, found)
    }

    /// Primary decomposition by recursive splitting of non-pure-power
    /// generators, made irredundant. Components are sorted by height, then
    /// by generators.
    pub fn primary_components(&self) -> Vec<MonomialIdeal> {
        if self.is_unit() {
            return Vec::new();
        }
        let mut parts = Vec::new();
        split(self.clone(), &mut parts);
        parts.sort_by(cmp_components);
        parts.dedup();

        // a component containing another is superfluous
        let mut kept: Vec<MonomialIdeal> = Vec::new();
        for (i, q) in parts.iter().enumerate() {
            let superfluous = parts.iter().enumerate().any(|(j, other)| j != i && q.contains_ideal(other));
            if !superfluous {
                kept.push(q.clone());
            }
        }

        // merge components with equal radicals
        let mut merged: Vec<MonomialIdeal> = Vec::new();
        for q in kept {
            let rad = q.radical();
            match merged.iter_mut().find(|m| m.radical() == rad) {
                Some(m) => *m = m.intersect(&q),
                None => merged.push(q),
            }
        }

        // drop components that contain the intersection of the others
        let mut i = 0;
        while i < merged.len() && merged.len() > 1 {
            let others = merged
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| q.clone())
                .reduce(|a, b| a.intersect(&b))
                .expect("at least one other component");
            if merged[i].contains_ideal(&others) {
                merged.remove(i);
            } else {
                i += 1;
            }
        }
        merged.sort_by(cmp_components);
        merged
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        MonomialIdealDisplay { ideal: self, names }
    }
}

struct MonomialIdealDisplay<'a> {
    ideal: &'a MonomialIdeal,
    names: &'a [String],
}

impl fmt::Display for MonomialIdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ideal.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.ideal.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            g.fmt_with(self.names, f)?;
        }
        write!(f, ")")
    }
}

/// The divisibility-minimal monomials among `gens`, deduplicated and sorted
/// descending in lex.
pub fn minimal_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| MonomialOrder::Lex.cmp(a, b));
    gens.dedup();
    let mut minimal: Vec<Monomial> =
        gens.iter().filter(|g| !gens.iter().any(|h| h != *g && h.divides(g))).cloned().collect();
    minimal.reverse();
    minimal
}

fn cmp_components(a: &MonomialIdeal, b: &MonomialIdeal) -> Ordering {
    let (ra, rb) = (a.radical(), b.radical());
    ra.gens
        .len()
        .cmp(&rb.gens.len())
        .then_with(|| cmp_gen_lists(&ra.gens, &rb.gens))
        .then_with(|| cmp_gen_lists(&a.gens, &b.gens))
}

fn cmp_gen_lists(a: &[Monomial], b: &[Monomial]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match MonomialOrder::Lex.cmp(x, y) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    a.len().cmp(&b.len())
}

fn split(ideal: MonomialIdeal, out: &mut Vec<MonomialIdeal>) {
    if ideal.is_unit() {
        return;
    }
    let Some(m) = ideal.gens.iter().find(|g| g.support().len() >= 2).cloned() else {
        out.push(ideal);
        return;
    };
    let v = m.support()[0];
    let n = ideal.nvars;
    let mut pure = vec![0; n];
    pure[v] = m.exponents()[v];
    let first = Monomial::new(pure);
    let second = m.div(&first).expect("pure part divides");
    split(ideal.sum(&MonomialIdeal::new(n, vec![first])), out);
    split(ideal.sum(&MonomialIdeal::new(n, vec![second])), out);
}

fn box_monomials(bound: &[u32]) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..=b).map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

/// Exact LP: `sum l_g = 1`, `sum l_g g_i + s_i = e_i`, `l, s >= 0`.
fn newton_feasible(gens: &[Monomial], m: &Monomial) -> bool {
    let n = m.nvars();
    let k = gens.len();
    let q = |v: u32| BigRational::from_integer(v.into());
    let mut a = Vec::with_capacity(n + 1);
    let mut b = Vec::with_capacity(n + 1);
    let mut norm = vec![q(1); k];
    norm.extend((0..n).map(|_| BigRational::zero()));
    a.push(norm);
    b.push(q(1));
    for i in 0..n {
        let mut row: Vec<BigRational> = gens.iter().map(|g| q(g.exponents()[i])).collect();
        row.extend((0..n).map(|j| if i == j { q(1) } else { BigRational::zero() }));
        a.push(row);
        b.push(q(m.exponents()[i]));
    }
    lp::feasible(&a, &b)
}

/// Where a decomposition came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    ComputedMonomial,
    UserSupplied,
}

/// State of one verified claim about a component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    /// Accepted without an exact check (primality of a non-monomial prime).
    Assumed,
    /// Not checked at all; such decompositions are refused downstream.
    Unchecked,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Assumed => "assumed",
            Status::Unchecked => "unchecked",
        })
    }
}

/// Per-component verification record.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentStatus {
    /// `q ⊆ p`.
    pub contained: Status,
    /// `p = rad(q)`.
    pub radical: Status,
    /// `p` is prime.
    pub prime: Status,
    /// `q` is primary.
    pub primary: Status,
}

impl ComponentStatus {
    pub const VERIFIED: ComponentStatus = ComponentStatus {
        contained: Status::Verified,
        radical: Status::Verified,
        prime: Status::Verified,
        primary: Status::Verified,
    };

    pub const UNCHECKED: ComponentStatus = ComponentStatus {
        contained: Status::Unchecked,
        radical: Status::Unchecked,
        prime: Status::Unchecked,
        primary: Status::Unchecked,
    };

    fn all(&self) -> [(&'static str, Status); 4] {
        [("q ⊆ p", self.contained), ("p = rad(q)", self.radical), ("p prime", self.prime), ("q primary", self.primary)]
    }

    pub fn is_assumed(&self) -> bool {
        self.all().iter().any(|(_, s)| *s == Status::Assumed)
    }
}

/// One primary component with its prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub primary: Ideal,
    pub prime: Ideal,
    pub status: ComponentStatus,
}

/// `I = q_1 ∩ ... ∩ q_k` with `p_i = rad(q_i)`.
#[derive(Clone, Debug)]
pub struct PrimaryDecomposition {
    ideal: Ideal,
    components: Vec<Component>,
    provenance: Provenance,
    intersection_verified: bool,
}

impl PrimaryDecomposition {
    pub(crate) fn from_parts(
        ideal: Ideal,
        components: Vec<Component>,
        provenance: Provenance,
        intersection_verified: bool,
    ) -> Self {
        PrimaryDecomposition { ideal, components, provenance, intersection_verified }
    }

    /// A decomposition taken on trust. Every claim is marked unchecked, so
    /// [`associated_primes`] refuses it until it passes verification.
    pub fn unchecked(ideal: Ideal, components: Vec<(Ideal, Ideal)>) -> Self {
        let components = components
            .into_iter()
            .map(|(primary, prime)| Component { primary, prime, status: ComponentStatus::UNCHECKED })
            .collect();
        PrimaryDecomposition { ideal, components, provenance: Provenance::UserSupplied, intersection_verified: false }
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn intersection_verified(&self) -> bool {
        self.intersection_verified
    }

    /// Lists every claim that was not checked.
    pub fn verification_report(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.intersection_verified {
            out.push("intersection of components: unchecked".to_string());
        }
        for (i, c) in self.components.iter().enumerate() {
            for (claim, status) in c.status.all() {
                if status == Status::Unchecked {
                    out.push(format!("component {}: {claim}: unchecked", i + 1));
                }
            }
        }
        out
    }

    pub fn is_verified(&self) -> bool {
        self.verification_report().is_empty()
    }
}

/// Primary decomposition of a monomial ideal of `ring`. The monomial ideal
/// is read as a preimage, so it must contain the relations of `ring`.
pub fn monomial_primary_decomposition(
    ring: &Arc<PresentedRing>,
    ideal: &MonomialIdeal,
) -> Result<PrimaryDecomposition> {
    let whole = Ideal::from_monomials(ring, ideal)?;
    if !whole.contains_ideal(&ring.zero_ideal())? || whole.lift_monomial().as_ref() != Some(ideal) {
        return Err(Error::Unsupported("the monomial ideal does not contain the relations of the ring".into()));
    }
    let parts = ideal.primary_components();
    let recombined =
        parts.iter().cloned().reduce(|a, b| a.intersect(&b)).unwrap_or_else(|| MonomialIdeal::unit(ideal.nvars()));
    if &recombined != ideal {
        return Err(Error::Unverified("monomial decomposition does not intersect back to the input".into()));
    }
    let mut components = Vec::with_capacity(parts.len());
    for q in &parts {
        let p = q.radical();
        let primary_ok = q.is_primary() && p.is_prime() && p.contains_ideal(q);
        if !primary_ok {
            return Err(Error::Unverified(format!(
                "component {} fails the monomial primary criterion",
                q.display(ring.names())
            )));
        }
        components.push(Component {
            primary: Ideal::from_monomials(ring, q)?,
            prime: Ideal::from_monomials(ring, &p)?,
            status: ComponentStatus::VERIFIED,
        });
    }
    Ok(PrimaryDecomposition::from_parts(whole, components, Provenance::ComputedMonomial, true))
}

/// The distinct primes of a verified decomposition, in component order.
pub fn associated_primes(d: &PrimaryDecomposition) -> Result<Vec<Ideal>> {
    let report = d.verification_report();
    if !report.is_empty() {
        return Err(Error::Unverified(report.join("; ")));
    }
    let mut primes: Vec<Ideal> = Vec::new();
    for c in &d.components {
        if !primes.contains(&c.prime) {
            primes.push(c.prime.clone());
        }
    }
    Ok(primes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into(), "z".into()]
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn show(i: &MonomialIdeal) -> String {
        i.display(&names()[..i.nvars()]).to_string()
    }

    fn ideal2(exps: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(2, exps)
    }

    #[test]
    fn minimal_generator_sets() {
        assert_eq!(show(&ideal2(&[&[1, 0], &[1, 1]])), "(x)");
        assert_eq!(show(&ideal2(&[&[2, 0], &[1, 1], &[0, 2], &[2, 1]])), "(x^2, x*y, y^2)");
        assert_eq!(show(&ideal2(&[&[1, 0]])), "(x)");
        assert_eq!(show(&MonomialIdeal::zero(2)), "(0)");
    }

    #[test]
    fn radicals() {
        assert_eq!(show(&ideal2(&[&[3, 0], &[1, 2]]).radical()), "(x)");
        assert_eq!(show(&ideal2(&[&[2, 0], &[1, 1]]).radical()), "(x)");
        let i = MonomialIdeal::from_exponents(3, &[&[1, 0, 0], &[0, 1, 1]]);
        assert_eq!(i.radical(), i);
    }

    #[test]
    fn decompositions() {
        let parts = ideal2(&[&[2, 0], &[1, 1]]).primary_components();
        let shown: Vec<String> = parts.iter().map(show).collect();
        assert_eq!(shown, ["(x)", "(x^2, y)"]);

        let i = MonomialIdeal::from_exponents(3, &[&[1, 0, 0], &[0, 1, 1]]);
        let shown: Vec<String> = i.primary_components().iter().map(show).collect();
        assert_eq!(shown, ["(x, y)", "(x, z)"]);

        let p = ideal2(&[&[1, 0], &[0, 1]]);
        assert_eq!(p.primary_components(), vec![p.clone()]);
        assert!(MonomialIdeal::unit(2).primary_components().is_empty());
        assert_eq!(MonomialIdeal::zero(2).primary_components(), vec![MonomialIdeal::zero(2)]);
    }

    #[test]
    fn equal_radicals_are_merged() {
        // (x^2, xy^2, y^3): the split yields (x^2, y^2)-type pieces that share (x, y)
        let i = ideal2(&[&[2, 0], &[1, 2], &[0, 3]]);
        let parts = i.primary_components();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0], i);
    }

    #[test]
    fn primary_criterion() {
        assert!(ideal2(&[&[2, 0], &[0, 1]]).is_primary());
        assert!(!ideal2(&[&[2, 0], &[1, 1]]).is_primary());
        assert!(ideal2(&[&[2, 0], &[1, 1], &[0, 3]]).is_primary());
        assert!(!MonomialIdeal::unit(2).is_primary());
    }

    #[test]
    fn integral_closures() {
        assert_eq!(show(&ideal2(&[&[2, 0], &[0, 2]]).integral_closure()), "(x^2, x*y, y^2)");
        let c = ideal2(&[&[3, 0], &[0, 3]]).integral_closure();
        assert_eq!(show(&c), "(x^3, x^2*y, x*y^2, y^3)");
        assert!(!c.contains(&mono(&[1, 1])));
        assert_eq!(show(&ideal2(&[&[1, 0]]).integral_closure()), "(x)");
        assert!(MonomialIdeal::zero(2).integral_closure().is_zero());
    }

    #[test]
    fn integral_membership_in_three_variables() {
        let i = MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        assert!(i.integral_contains(&mono(&[1, 1, 0])));
        assert!(!i.integral_contains(&mono(&[1, 0, 0])));
        let i = MonomialIdeal::from_exponents(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
        assert!(i.integral_contains(&mono(&[1, 1, 1])));
        assert!(!i.integral_contains(&mono(&[1, 1, 0])));
    }

    #[test]
    fn colon_and_intersection() {
        let i = ideal2(&[&[2, 0], &[1, 1]]);
        assert_eq!(show(&i.colon(&mono(&[1, 0]))), "(x, y)");
        let a = ideal2(&[&[1, 0]]);
        let b = ideal2(&[&[0, 1]]);
        assert_eq!(show(&a.intersect(&b)), "(x*y)");
    }

    #[test]
    fn decomposition_as_ideals() {
        let ring = PresentedRing::parse(Field::Rational, &["x", "y"], &[]).unwrap();
        let i = ideal2(&[&[2, 0], &[1, 1]]);
        let d = monomial_primary_decomposition(&ring, &i).unwrap();
        assert!(d.is_verified());
        let primes: Vec<String> = associated_primes(&d).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(primes, ["(x)", "(x, y)"]);

        let q = ring.ideal(&["x"]).unwrap();
        let unchecked = PrimaryDecomposition::unchecked(q.clone(), vec![(q.clone(), q)]);
        assert!(matches!(associated_primes(&unchecked), Err(Error::Unverified(_))));
    }

    #[test]
    fn decomposition_requires_relations() {
        let ring = PresentedRing::parse(Field::Rational, &["x", "y"], &["x^2"]).unwrap();
        let i = ideal2(&[&[0, 1]]);
        assert!(monomial_primary_decomposition(&ring, &i).is_err());
    }
}
