use std::cmp::Ordering;
use std::fmt;

use super::{Monomial, MonomialOrder};
use crate::error::PolyError;
use crate::scalar::{Field, Scalar};

/// The ambient data every polynomial carries: variable count, coefficient
/// field and the monomial order its terms are sorted by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyContext {
    pub nvars: usize,
    pub field: Field,
    pub order: MonomialOrder,
}

impl PolyContext {
    pub fn new(nvars: usize, field: Field, order: MonomialOrder) -> Self {
        PolyContext { nvars, field, order }
    }

    pub fn with_order(self, order: MonomialOrder) -> Self {
        PolyContext { order, ..self }
    }

    /// Same variable count and coefficient field (orders may differ).
    pub fn compatible(&self, other: &PolyContext) -> bool {
        self.nvars == other.nvars && self.field == other.field
    }
}

pub type Term = (Monomial, Scalar);

/// A polynomial in canonical form: terms strictly descending in the
/// context's order, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ctx: PolyContext,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ctx: PolyContext) -> Self {
        Polynomial { ctx, terms: Vec::new() }
    }

    pub fn constant(ctx: PolyContext, c: Scalar) -> Self {
        Self::from_terms(ctx, vec![(Monomial::one(ctx.nvars), c)])
    }

    pub fn one(ctx: PolyContext) -> Self {
        Self::constant(ctx, ctx.field.one())
    }

    pub fn var(ctx: PolyContext, i: usize) -> Self {
        Self::monomial(ctx, Monomial::var(ctx.nvars, i))
    }

    pub fn monomial(ctx: PolyContext, m: Monomial) -> Self {
        Polynomial { ctx, terms: vec![(m, ctx.field.one())] }
    }

    /// Canonicalizes an arbitrary term list: sorts, merges equal monomials
    /// and drops zero coefficients.
    pub fn from_terms(ctx: PolyContext, mut terms: Vec<Term>) -> Self {
        let order = ctx.order;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ctx.nvars);
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => out.push((m, c)),
            }
            if out.last().is_some_and(|(_, c)| c.is_zero()) {
                out.pop();
            }
        }
        Polynomial { ctx, terms: out }
    }

    pub fn ctx(&self) -> PolyContext {
        self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars
    }

    pub fn field(&self) -> Field {
        self.ctx.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.ctx.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Leading term with respect to the stored order.
    pub fn lt(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Leading monomial with respect to the stored order. Panics on zero.
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &Scalar {
        &self.terms[0].1
    }

    /// The order-maximal term under `ord`.
    pub fn leading_term(&self, ord: MonomialOrder) -> Result<Term, PolyError> {
        let best = if ord == self.ctx.order {
            self.terms.first()
        } else {
            self.terms.iter().max_by(|a, b| ord.cmp(&a.0, &b.0))
        };
        best.cloned().ok_or(PolyError::ZeroPolynomial)
    }

    /// Re-sorts the terms for a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.ctx.order {
            return self.clone();
        }
        let ctx = self.ctx.with_order(order);
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ctx, terms }
    }

    fn check(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ctx.compatible(&other.ctx) {
            Ok(())
        } else {
            Err(PolyError::IncompatibleRing(format!(
                "{} in {} variables vs {} in {} variables",
                self.ctx.field, self.ctx.nvars, other.ctx.field, other.ctx.nvars
            )))
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        let other = other.with_order(self.ctx.order);
        Ok(self.merge(&other, |c| c.clone()))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        let other = other.with_order(self.ctx.order);
        Ok(self.merge(&other, |c| -c))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        let mut acc = Polynomial::zero(self.ctx);
        // accumulate per term of the shorter factor
        let (short, long) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let long = long.with_order(self.ctx.order);
        for (m, c) in &short.terms {
            acc = acc.merge(&long.mul_term(m, c), |c| c.clone());
        }
        Ok(acc)
    }

    /// `self + map(other)` as a sorted merge; both in the same order.
    fn merge(&self, other: &Polynomial, map: impl Fn(&Scalar) -> Scalar) -> Polynomial {
        let order = self.ctx.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match order.cmp(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.0.clone(), map(&b.1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.1 + &map(&b.1);
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), map(c))));
        Polynomial { ctx: self.ctx, terms: out }
    }

    pub(crate) fn without_lead(&self) -> Polynomial {
        Polynomial { ctx: self.ctx, terms: self.terms[1..].to_vec() }
    }

    /// `self - c * m * g`, the elementary reduction step.
    pub(crate) fn sub_mul_term(&self, c: &Scalar, m: &Monomial, g: &Polynomial) -> Polynomial {
        let shifted = g.mul_term(m, c);
        self.merge(&shifted, |x| -x)
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ctx);
        }
        // multiplication by a monomial preserves a monomial order
        let terms = self.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect();
        Polynomial { ctx: self.ctx, terms }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(&Monomial::one(self.ctx.nvars), c)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-&self.ctx.field.one())
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `f^q` for `q` a power of the characteristic, computed as
    /// `sum c * m^q` (coefficients of `F_p` are fixed by Frobenius).
    pub fn frobenius_power(&self, q: u32) -> Polynomial {
        debug_assert!(matches!(self.ctx.field, Field::Prime(_)));
        let terms = self.terms.iter().map(|(m, c)| (m.pow(q), c.clone())).collect();
        Polynomial::from_terms(self.ctx, terms)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves
    /// a remainder. A single polynomial is a Gröbner basis of the principal
    /// ideal it generates, so leading-term division decides divisibility.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let divisor = divisor.with_order(self.ctx.order);
        if divisor.is_zero() {
            return None;
        }
        let (dm, dc) = (divisor.lm().clone(), divisor.lc().inv());
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.terms.first() {
            let q = m.div(&dm)?;
            let qc = c * &dc;
            rest = rest.sub_mul_term(&qc, &q, &divisor);
            quotient.push((q, qc));
        }
        Some(Polynomial { ctx: self.ctx, terms: quotient })
    }

    /// Embeds into a ring with `k` new variables placed before the existing
    /// ones, sorted by `order`.
    pub fn extend_front(&self, k: usize, order: MonomialOrder) -> Polynomial {
        let ctx = PolyContext::new(self.ctx.nvars + k, self.ctx.field, order);
        let terms = self.terms.iter().map(|(m, c)| (m.extend_front(k), c.clone())).collect();
        Polynomial::from_terms(ctx, terms)
    }

    /// Drops the first `k` variables, which must not occur.
    pub fn drop_front(&self, k: usize, order: MonomialOrder) -> Option<Polynomial> {
        let ctx = PolyContext::new(self.ctx.nvars - k, self.ctx.field, order);
        let terms =
            self.terms.iter().map(|(m, c)| m.drop_front(k).map(|m| (m, c.clone()))).collect::<Option<Vec<_>>>()?;
        Some(Polynomial::from_terms(ctx, terms))
    }

    /// Whether any term involves one of the first `k` variables.
    pub fn involves_front(&self, k: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponents()[..k].iter().any(|&e| e > 0))
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

/// Canonical text form, e.g. `x^2*y - 3/2*z`.
pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let c = c.abs();
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                m.fmt_with(self.names, f)?;
            } else {
                write!(f, "{c}*")?;
                m.fmt_with(self.names, f)?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomials over different rings")
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);
