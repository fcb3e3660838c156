//! Presented rings `R = k[x_1..x_n]/J`, their elements and ideals.
//!
//! An ideal of `R` is stored through its preimage in the covering ring
//! `S = k[x_1..x_n]`, which always contains `J`. Every operation runs in `S`
//! (or in `S[t]` for intersections and radical membership) and is read
//! back modulo `J`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::RingError;
use crate::groebner::{eliminate, reduce, reduced_groebner_basis, GroebnerBasis};
use crate::monomial::MonomialIdeal;
use crate::poly::{parse_polynomial, Monomial, MonomialOrder, PolyContext, Polynomial};
use crate::scalar::Field;

type Result<T> = std::result::Result<T, RingError>;

/// Lifted generators of a primary component and of its prime.
pub type LiftedComponent = (Vec<Polynomial>, Vec<Polynomial>);

/// `R = k[x_1..x_n]/J` with the reduced grevlex basis of `J` cached.
#[derive(Debug)]
pub struct PresentedRing {
    field: Field,
    names: Vec<String>,
    relations: Vec<Polynomial>,
    relation_basis: GroebnerBasis,
    is_domain: bool,
    relation_decomposition: Option<Vec<LiftedComponent>>,
}

impl PartialEq for PresentedRing {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.names == other.names && self.relation_basis == other.relation_basis
    }
}

impl Eq for PresentedRing {}

impl PresentedRing {
    pub fn new(field: Field, names: Vec<String>, relations: Vec<Polynomial>) -> Result<Arc<Self>> {
        Self::build(field, names, relations, None)
    }

    /// A presented ring together with a primary decomposition of `J`
    /// (as lifted `(q, p)` generator lists). It is verified before use.
    pub fn with_relation_decomposition(
        field: Field,
        names: Vec<String>,
        relations: Vec<Polynomial>,
        components: Vec<LiftedComponent>,
    ) -> Result<Arc<Self>> {
        Self::build(field, names, relations, Some(components))
    }

    fn build(
        field: Field,
        names: Vec<String>,
        relations: Vec<Polynomial>,
        decomposition: Option<Vec<LiftedComponent>>,
    ) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(RingError::InvalidRing("at least one variable is required".into()));
        }
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(RingError::InvalidRing(format!("invalid variable name '{n}'")));
            }
            if names[..i].contains(n) {
                return Err(RingError::InvalidRing(format!("duplicate variable '{n}'")));
            }
        }
        let ctx = PolyContext::new(names.len(), field, MonomialOrder::Grevlex);
        let relations: Vec<Polynomial> = relations.iter().map(|r| r.with_order(ctx.order)).collect();
        let relation_basis = reduced_groebner_basis(ctx, &relations)?;
        if relation_basis.is_unit() {
            return Err(RingError::InvalidRing("relations generate the unit ideal".into()));
        }
        let is_domain = relation_basis.is_zero_ideal()
            || relation_basis.generators().iter().all(|g| g.is_monomial() && g.lm().degree() == 1);
        Ok(Arc::new(PresentedRing {
            field,
            names,
            relations,
            relation_basis,
            is_domain,
            relation_decomposition: decomposition,
        }))
    }

    /// `k[names]` with no relations.
    pub fn polynomial_ring(field: Field, names: &[&str]) -> Result<Arc<Self>> {
        Self::new(field, names.iter().map(|s| s.to_string()).collect(), Vec::new())
    }

    /// Declares a ring from relation strings, e.g. `["x^2", "x*y"]`.
    pub fn parse(field: Field, names: &[&str], relations: &[&str]) -> Result<Arc<Self>> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let ctx = PolyContext::new(names.len(), field, MonomialOrder::Grevlex);
        let relations =
            relations.iter().map(|r| parse_polynomial(r, &names, ctx)).collect::<std::result::Result<Vec<_>, _>>()?;
        Self::new(field, names, relations)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// Context of the covering polynomial ring, grevlex.
    pub fn ctx(&self) -> PolyContext {
        PolyContext::new(self.names.len(), self.field, MonomialOrder::Grevlex)
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn relation_basis(&self) -> &GroebnerBasis {
        &self.relation_basis
    }

    /// True when `J = 0` or `J` is generated by variables.
    pub fn is_domain(&self) -> bool {
        self.is_domain
    }

    /// True when `J = 0`.
    pub fn is_polynomial_ring(&self) -> bool {
        self.relation_basis.is_zero_ideal()
    }

    pub fn relation_decomposition(&self) -> Option<&[LiftedComponent]> {
        self.relation_decomposition.as_deref()
    }

    pub(crate) fn reduce_mod_relations(&self, f: &Polynomial) -> Polynomial {
        reduce(&f.with_order(MonomialOrder::Grevlex), self.relation_basis.generators())
    }

    pub fn element(self: &Arc<Self>, f: &Polynomial) -> Result<RingElement> {
        if !f.ctx().compatible(&self.ctx()) {
            return Err(RingError::Poly(crate::PolyError::IncompatibleRing(format!(
                "polynomial in {} variables over {} does not belong to {}",
                f.nvars(),
                f.field(),
                self
            ))));
        }
        Ok(RingElement { ring: self.clone(), rep: self.reduce_mod_relations(f) })
    }

    pub fn parse_element(self: &Arc<Self>, text: &str) -> Result<RingElement> {
        let f = parse_polynomial(text, &self.names, self.ctx())?;
        self.element(&f)
    }

    pub fn var(self: &Arc<Self>, i: usize) -> RingElement {
        self.element(&Polynomial::var(self.ctx(), i)).expect("own context")
    }

    pub fn variables(self: &Arc<Self>) -> Vec<RingElement> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn one(self: &Arc<Self>) -> RingElement {
        self.element(&Polynomial::one(self.ctx())).expect("own context")
    }

    pub fn zero(self: &Arc<Self>) -> RingElement {
        RingElement { ring: self.clone(), rep: Polynomial::zero(self.ctx()) }
    }

    pub fn monomial(self: &Arc<Self>, m: &Monomial) -> RingElement {
        self.element(&Polynomial::monomial(self.ctx(), m.clone())).expect("own context")
    }

    /// Ideal generated by the given polynomial strings.
    pub fn ideal(self: &Arc<Self>, gens: &[&str]) -> Result<Ideal> {
        let polys = gens
            .iter()
            .map(|g| parse_polynomial(g, &self.names, self.ctx()))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ideal::from_polys(self, polys)
    }

    pub fn unit_ideal(self: &Arc<Self>) -> Ideal {
        Ideal::from_polys(self, vec![Polynomial::one(self.ctx())]).expect("own context")
    }

    pub fn zero_ideal(self: &Arc<Self>) -> Ideal {
        Ideal::from_polys(self, Vec::new()).expect("own context")
    }

    pub(crate) fn same(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }

    fn check(a: &Arc<Self>, b: &Arc<Self>) -> Result<()> {
        if Self::same(a, b) {
            Ok(())
        } else {
            Err(RingError::RingMismatch)
        }
    }
}

impl fmt::Display for PresentedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.names.join(","))?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self.relations.iter().map(|r| r.display(&self.names).to_string()).collect();
            write!(f, "/({})", rels.join(", "))?;
        }
        Ok(())
    }
}

/// An element of a presented ring, stored as its normal form modulo `J`.
#[derive(Clone, Debug)]
pub struct RingElement {
    ring: Arc<PresentedRing>,
    rep: Polynomial,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        PresentedRing::same(&self.ring, &other.ring) && self.rep == other.rep
    }
}

impl Eq for RingElement {}

impl RingElement {
    pub fn ring(&self) -> &Arc<PresentedRing> {
        &self.ring
    }

    /// The canonical representative in the covering ring.
    pub fn lift(&self) -> &Polynomial {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        PresentedRing::check(&self.ring, &other.ring)?;
        self.ring.element(&(&self.rep + &other.rep))
    }

    pub fn try_sub(&self, other: &RingElement) -> Result<RingElement> {
        PresentedRing::check(&self.ring, &other.ring)?;
        self.ring.element(&(&self.rep - &other.rep))
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement> {
        PresentedRing::check(&self.ring, &other.ring)?;
        self.ring.element(&(&self.rep * &other.rep))
    }

    pub fn pow(&self, e: u32) -> RingElement {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Whether the element is a non-zerodivisor: `(J : w) = J`.
    pub fn is_regular(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.ring.is_polynomial_ring() {
            return true;
        }
        let zero = self.ring.zero_ideal();
        zero.colon(self).expect("same ring") == zero
    }

    /// Whether the element is invertible in `R`.
    pub fn is_unit(&self) -> bool {
        Ideal::from_polys(&self.ring, vec![self.rep.clone()]).expect("own ring").is_unit()
    }

    /// Whether the lift is a single term with coefficient one.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.rep.terms() {
            [(m, c)] if c.is_one() => Some(m),
            _ => None,
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep.display(self.ring.names()))
    }
}

macro_rules! element_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                self.$checked(rhs).expect("elements of different rings")
            }
        }
    };
}

element_op!(Add, add, try_add);
element_op!(Sub, sub, try_sub);
element_op!(Mul, mul, try_mul);

/// How two ideals compare under inclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealRelation {
    Equal,
    Subset,
    Superset,
    Incomparable,
}

/// A finitely generated ideal of a presented ring.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<PresentedRing>,
    basis: GroebnerBasis,
    canonical: OnceLock<Vec<Polynomial>>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        PresentedRing::same(&self.ring, &other.ring) && self.basis == other.basis
    }
}

impl Eq for Ideal {}

impl Ideal {
    /// The ideal of `R` generated by the images of `gens`.
    pub fn from_polys(ring: &Arc<PresentedRing>, gens: Vec<Polynomial>) -> Result<Ideal> {
        let ctx = ring.ctx();
        for g in &gens {
            if !g.ctx().compatible(&ctx) {
                return Err(RingError::RingMismatch);
            }
        }
        let mut all: Vec<Polynomial> = gens.iter().map(|g| ring.reduce_mod_relations(g)).collect();
        all.extend(ring.relation_basis.generators().iter().cloned());
        let basis = reduced_groebner_basis(ctx, &all)?;
        Ok(Ideal { ring: ring.clone(), basis, canonical: OnceLock::new() })
    }

    pub fn from_elements(ring: &Arc<PresentedRing>, gens: &[RingElement]) -> Result<Ideal> {
        for g in gens {
            PresentedRing::check(ring, &g.ring)?;
        }
        Self::from_polys(ring, gens.iter().map(|g| g.rep.clone()).collect())
    }

    pub fn from_monomials(ring: &Arc<PresentedRing>, m: &MonomialIdeal) -> Result<Ideal> {
        if m.nvars() != ring.nvars() {
            return Err(RingError::RingMismatch);
        }
        let ctx = ring.ctx();
        Self::from_polys(ring, m.generators().iter().map(|g| Polynomial::monomial(ctx, g.clone())).collect())
    }

    pub fn ring(&self) -> &Arc<PresentedRing> {
        &self.ring
    }

    /// Reduced grevlex basis of the preimage `I + J` in the covering ring.
    pub fn lift_basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    pub fn is_unit(&self) -> bool {
        self.basis.is_unit()
    }

    /// Whether this is the zero ideal of `R`, i.e. the preimage equals `J`.
    pub fn is_zero(&self) -> bool {
        self.basis == self.ring.relation_basis
    }

    /// Canonical generators: reduced-basis elements outside `J` with
    /// redundant members greedily removed, sorted descending by leading
    /// monomial in lex.
    pub fn generators(&self) -> &[Polynomial] {
        self.canonical.get_or_init(|| {
            let relations = self.ring.relation_basis.generators();
            let mut gens: Vec<Polynomial> =
                self.basis.generators().iter().filter(|g| !self.ring.relation_basis.contains(g)).cloned().collect();
            gens.sort_by(|a, b| MonomialOrder::Lex.cmp(b.lm(), a.lm()));
            let mut i = 0;
            while i < gens.len() && gens.len() > 1 {
                let mut others: Vec<Polynomial> =
                    gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
                others.extend(relations.iter().cloned());
                let gb = reduced_groebner_basis(self.ring.ctx(), &others).expect("same context");
                if gb == self.basis {
                    gens.remove(i);
                } else {
                    i += 1;
                }
            }
            gens
        })
    }

    pub fn generator_elements(&self) -> Vec<RingElement> {
        self.generators().iter().map(|g| RingElement { ring: self.ring.clone(), rep: g.clone() }).collect()
    }

    /// `f ∈ I`.
    pub fn contains(&self, f: &RingElement) -> Result<bool> {
        PresentedRing::check(&self.ring, &f.ring)?;
        Ok(self.basis.contains(&f.rep))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        PresentedRing::check(&self.ring, &other.ring)?;
        Ok(other.basis.generators().iter().all(|g| self.basis.contains(g)))
    }

    pub fn compare(&self, other: &Ideal) -> Result<IdealRelation> {
        let sub = other.contains_ideal(self)?;
        let sup = self.contains_ideal(other)?;
        Ok(match (sub, sup) {
            (true, true) => IdealRelation::Equal,
            (true, false) => IdealRelation::Subset,
            (false, true) => IdealRelation::Superset,
            (false, false) => IdealRelation::Incomparable,
        })
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        PresentedRing::check(&self.ring, &other.ring)?;
        let mut gens = self.basis.generators().to_vec();
        gens.extend(other.basis.generators().iter().cloned());
        Ideal::from_polys(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        PresentedRing::check(&self.ring, &other.ring)?;
        let mut gens = Vec::new();
        for a in self.generators() {
            for b in other.generators() {
                gens.push(a * b);
            }
        }
        Ideal::from_polys(&self.ring, gens)
    }

    /// `I^n`, with `I^0 = R`.
    pub fn power(&self, n: u32) -> Ideal {
        let mut acc = self.ring.unit_ideal();
        for _ in 0..n {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// The principal multiple `w * I`.
    pub fn scale(&self, w: &RingElement) -> Result<Ideal> {
        PresentedRing::check(&self.ring, &w.ring)?;
        let gens = self.generators().iter().map(|g| g * &w.rep).collect();
        Ideal::from_polys(&self.ring, gens)
    }

    /// `I ∩ K`, by eliminating `t` from `t*I + (1 - t)*K` in `S[t]`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        PresentedRing::check(&self.ring, &other.ring)?;
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let gens = intersect_lifts(self.basis.generators(), other.basis.generators(), self.ring.ctx())?;
        Ideal::from_polys(&self.ring, gens)
    }

    /// `(I : f) = {g : g f ∈ I}`; `(I : 0) = R`.
    pub fn colon(&self, f: &RingElement) -> Result<Ideal> {
        PresentedRing::check(&self.ring, &f.ring)?;
        if f.is_zero() || self.basis.contains(&f.rep) {
            return Ok(self.ring.unit_ideal());
        }
        let ctx = self.ring.ctx();
        let inter = intersect_lifts(self.basis.generators(), std::slice::from_ref(&f.rep), ctx)?;
        let quotients =
            inter.iter().map(|g| g.div_exact(&f.rep).expect("generators of I ∩ (f) are multiples of f")).collect();
        Ideal::from_polys(&self.ring, quotients)
    }

    /// `(I : K)`, the intersection of the colons by the generators of `K`.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        PresentedRing::check(&self.ring, &other.ring)?;
        let mut acc = self.ring.unit_ideal();
        for g in other.generator_elements() {
            acc = acc.intersect(&self.colon(&g)?)?;
        }
        Ok(acc)
    }

    /// `f ∈ rad(I)`, decided by the Rabinowitsch test:
    /// `1 ∈ I + J + (1 - t f)` in `S[t]`.
    pub fn radical_contains(&self, f: &RingElement) -> Result<bool> {
        PresentedRing::check(&self.ring, &f.ring)?;
        if f.is_zero() || self.is_unit() {
            return Ok(true);
        }
        let order = MonomialOrder::Grevlex;
        let ctx = PolyContext::new(self.ring.nvars() + 1, self.ring.field, order);
        let mut gens: Vec<Polynomial> = self.basis.generators().iter().map(|g| g.extend_front(1, order)).collect();
        let t = Polynomial::var(ctx, 0);
        gens.push(&Polynomial::one(ctx) - &(&t * &f.rep.extend_front(1, order)));
        Ok(reduced_groebner_basis(ctx, &gens)?.is_unit())
    }

    /// The monomial ideal of the preimage, when `I + J` is generated by
    /// monomials.
    pub fn lift_monomial(&self) -> Option<MonomialIdeal> {
        if !self.basis.is_monomial() {
            return None;
        }
        Some(MonomialIdeal::new(self.ring.nvars(), self.basis.leading_monomials()))
    }

    /// Whether `I + J` is a monomial ideal.
    pub fn is_monomial(&self) -> bool {
        self.basis.is_monomial()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "(1)");
        }
        let gens = self.generators();
        if gens.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = gens.iter().map(|g| g.display(self.ring.names()).to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Generators of `<a> ∩ <b>` in the covering ring.
fn intersect_lifts(a: &[Polynomial], b: &[Polynomial], ctx: PolyContext) -> Result<Vec<Polynomial>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let order = MonomialOrder::Elimination(1);
    let ext = PolyContext::new(ctx.nvars + 1, ctx.field, order);
    let t = Polynomial::var(ext, 0);
    let one_minus_t = &Polynomial::one(ext) - &t;
    let mut gens = Vec::with_capacity(a.len() + b.len());
    gens.extend(a.iter().map(|g| &t * &g.extend_front(1, order)));
    gens.extend(b.iter().map(|h| &one_minus_t * &h.extend_front(1, order)));
    Ok(eliminate(&gens, 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq(names: &[&str], rels: &[&str]) -> Arc<PresentedRing> {
        PresentedRing::parse(Field::Rational, names, rels).unwrap()
    }

    #[test]
    fn arithmetic_of_ideals() {
        let r = qq(&["x", "y"], &[]);
        let x = r.ideal(&["x"]).unwrap();
        let y = r.ideal(&["y"]).unwrap();
        assert_eq!(x.sum(&y).unwrap().to_string(), "(x, y)");
        let m = r.ideal(&["x", "y"]).unwrap();
        assert_eq!(m.product(&m).unwrap().to_string(), "(x^2, x*y, y^2)");
        assert_eq!(m.power(0).to_string(), "(1)");
        assert_eq!(m.power(2), m.product(&m).unwrap());
    }

    #[test]
    fn intersections() {
        let r = qq(&["x", "y", "z"], &[]);
        let a = r.ideal(&["x"]).unwrap();
        let b = r.ideal(&["y"]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), r.ideal(&["x*y"]).unwrap());
        let a = r.ideal(&["x", "y"]).unwrap();
        let b = r.ideal(&["x", "z"]).unwrap();
        assert_eq!(a.intersect(&b).unwrap().to_string(), "(x, y*z)");
        assert_eq!(a.intersect(&r.unit_ideal()).unwrap(), a);
        assert_eq!(a.intersect(&r.zero_ideal()).unwrap(), r.zero_ideal());
    }

    #[test]
    fn colons() {
        let r = qq(&["x", "y"], &[]);
        let i = r.ideal(&["x^2", "x*y"]).unwrap();
        let x = r.parse_element("x").unwrap();
        assert_eq!(i.colon(&x).unwrap(), r.ideal(&["x", "y"]).unwrap());
        let i = r.ideal(&["x"]).unwrap();
        assert_eq!(i.colon(&r.one()).unwrap(), i);
        assert!(i.colon(&r.zero()).unwrap().is_unit());

        let s = qq(&["x", "y", "z"], &["x^2", "x*y"]);
        let y = s.parse_element("y").unwrap();
        let ann = s.zero_ideal().colon(&y).unwrap();
        assert!(ann.contains(&s.parse_element("x").unwrap()).unwrap());
        assert_ne!(ann, s.zero_ideal());
    }

    #[test]
    fn colon_by_ideal() {
        let r = qq(&["x", "y"], &[]);
        let i = r.ideal(&["x^2", "x*y", "y^2"]).unwrap();
        let m = r.ideal(&["x", "y"]).unwrap();
        assert_eq!(i.colon_ideal(&m).unwrap(), m);
    }

    #[test]
    fn membership_and_comparison() {
        let r = qq(&["x", "y"], &[]);
        let x = r.ideal(&["x"]).unwrap();
        assert!(x.contains(&r.parse_element("x^2 + x*y").unwrap()).unwrap());
        let i = r.ideal(&["x^2", "x*y"]).unwrap();
        assert!(!i.contains(&r.parse_element("y").unwrap()).unwrap());
        let j = r.ideal(&["x", "x*y"]).unwrap();
        assert_eq!(j.compare(&x).unwrap(), IdealRelation::Equal);
        assert_eq!(i.compare(&x).unwrap(), IdealRelation::Subset);
        assert_eq!(x.compare(&i).unwrap(), IdealRelation::Superset);
        let y = r.ideal(&["y"]).unwrap();
        assert_eq!(x.compare(&y).unwrap(), IdealRelation::Incomparable);
    }

    #[test]
    fn radical_membership() {
        let r = qq(&["x", "y", "z"], &[]);
        let e = |s: &str| r.parse_element(s).unwrap();
        assert!(r.ideal(&["x^2"]).unwrap().radical_contains(&e("x")).unwrap());
        assert!(r.ideal(&["x^2", "y^2"]).unwrap().radical_contains(&e("x+y")).unwrap());
        assert!(!r.ideal(&["x^2", "x*y"]).unwrap().radical_contains(&e("z")).unwrap());
    }

    #[test]
    fn regular_elements() {
        let r = qq(&["x", "y", "z"], &["x^2", "x*y"]);
        assert!(r.parse_element("z").unwrap().is_regular());
        assert!(!r.parse_element("x").unwrap().is_regular());
        assert!(!r.parse_element("y").unwrap().is_regular());
        assert!(!r.zero().is_regular());
        let p = qq(&["x", "y"], &[]);
        assert!(p.parse_element("x*y - 3").unwrap().is_regular());
    }

    #[test]
    fn presented_ring_validation() {
        assert!(PresentedRing::parse(Field::Rational, &["x", "x"], &[]).is_err());
        assert!(PresentedRing::parse(Field::Rational, &["x"], &["x - 1", "x"]).is_err());
        let r = qq(&["x", "y"], &["x"]);
        assert!(r.is_domain());
        assert!(!qq(&["x"], &["x^2"]).is_domain());
    }

    #[test]
    fn ring_mismatch() {
        let a = qq(&["x", "y"], &[]);
        let b = qq(&["x", "y"], &["x^2"]);
        let i = a.ideal(&["x"]).unwrap();
        let j = b.ideal(&["x"]).unwrap();
        assert_eq!(i.sum(&j), Err(RingError::RingMismatch));
    }

    #[test]
    fn zero_ideal_of_quotient_is_the_relations() {
        let r = qq(&["x", "y", "z"], &["x^2", "x*y"]);
        let i = r.ideal(&["x^2"]).unwrap();
        assert!(i.is_zero());
        assert_eq!(i.to_string(), "(0)");
        assert_eq!(r.ideal(&["x", "y*z"]).unwrap().to_string(), "(x, y*z)");
    }
}
