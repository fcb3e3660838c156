//! Fractional ideals and the maps between standard closures and semistar
//! operations.
//!
//! A fractional ideal `(1/d) N` is stored as the pair `(N, d)` with `d`
//! regular. A fraction `r/z` belongs to `A_{π(c)}` when `d r ∈ (z N)^c`.
//! Every representable submodule is finitely generated, so the union over
//! finitely generated `B ⊆ A` defining `σ_f(c)` is attained at `B = A`
//! (`π(c)` is order preserving) and `σ_f(c)` membership is `π(c)`
//! membership.

use std::fmt;
use std::sync::Arc;

use crate::closure::{ClosureOp, Membership};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::rings::{Ideal, PresentedRing, RingElement};
use crate::sample;

/// A fraction `r/z` of the total quotient ring with `z` regular.
#[derive(Clone, Debug)]
pub struct Fraction {
    num: RingElement,
    den: RingElement,
}

impl Fraction {
    pub fn new(num: RingElement, den: RingElement) -> Result<Self> {
        if !PresentedRing::same(num.ring(), den.ring()) {
            return Err(Error::Ring(crate::RingError::RingMismatch));
        }
        if !den.is_regular() {
            return Err(Error::NonRegular(den.to_string()));
        }
        Ok(Fraction { num, den })
    }

    /// `r/1`.
    pub fn whole(r: RingElement) -> Self {
        let den = r.ring().one();
        Fraction { num: r, den }
    }

    pub fn numerator(&self) -> &RingElement {
        &self.num
    }

    pub fn denominator(&self) -> &RingElement {
        &self.den
    }

    pub fn ring(&self) -> &Arc<PresentedRing> {
        self.num.ring()
    }

    /// `(r w)/(z w)` for a regular `w`.
    pub fn expand(&self, w: &RingElement) -> Result<Fraction> {
        Fraction::new(&self.num * w, &self.den * w)
    }

    pub fn mul(&self, other: &Fraction) -> Fraction {
        Fraction { num: &self.num * &other.num, den: &self.den * &other.den }
    }

    /// Whether the fraction is a unit of the total quotient ring, i.e. its
    /// numerator is regular as well.
    pub fn is_regular(&self) -> bool {
        self.num.is_regular()
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        PresentedRing::same(self.ring(), other.ring()) && &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |e: &RingElement| {
            let s = e.to_string();
            if e.lift().len() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

/// The submodule `(1/d) N` of the total quotient ring, `d` regular.
#[derive(Clone, Debug)]
pub struct FractionalIdeal {
    num: Ideal,
    den: RingElement,
}

impl FractionalIdeal {
    /// Builds `(1/d) N`, cancelling regular variable factors shared by `d`
    /// and every element of `N`.
    pub fn new(num: Ideal, den: RingElement) -> Result<Self> {
        if !PresentedRing::same(num.ring(), den.ring()) {
            return Err(Error::Ring(crate::RingError::RingMismatch));
        }
        if !den.is_regular() {
            return Err(Error::NonRegular(den.to_string()));
        }
        FractionalIdeal { num, den }.reduced()
    }

    pub fn from_ideal(i: Ideal) -> Self {
        let den = i.ring().one();
        FractionalIdeal { num: i, den }
    }

    pub fn numerator(&self) -> &Ideal {
        &self.num
    }

    pub fn denominator(&self) -> &RingElement {
        &self.den
    }

    pub fn ring(&self) -> &Arc<PresentedRing> {
        self.num.ring()
    }

    fn reduced(mut self) -> Result<Self> {
        let ring = self.ring().clone();
        loop {
            let mut changed = false;
            for v in ring.variables() {
                if !v.is_regular() {
                    continue;
                }
                let Some(q) = self.den.lift().div_exact(v.lift()) else {
                    continue;
                };
                let vr = Ideal::from_elements(&ring, std::slice::from_ref(&v))?;
                if self.num.is_zero() || !vr.contains_ideal(&self.num)? {
                    continue;
                }
                self.num = self.num.colon(&v)?;
                self.den = ring.element(&q)?;
                changed = true;
            }
            if !changed {
                return Ok(self);
            }
        }
    }

    /// Membership of `r/z`: `d r ∈ z N`.
    pub fn contains(&self, f: &Fraction) -> Result<bool> {
        let zn = self.num.scale(&f.den)?;
        Ok(zn.contains(&(&self.den * &f.num))?)
    }

    /// `u A = ((r N), z d)` for a fraction `u = r/z` with `r` regular.
    pub fn scale(&self, u: &Fraction) -> Result<FractionalIdeal> {
        if !u.num.is_regular() {
            return Err(Error::NonRegular(u.num.to_string()));
        }
        FractionalIdeal::new(self.num.scale(&u.num)?, &self.den * &u.den)
    }
}

/// `(N_1, d_1) = (N_2, d_2)` iff `d_2 N_1 = d_1 N_2`.
pub fn frac_equal(a: &FractionalIdeal, b: &FractionalIdeal) -> Result<bool> {
    Ok(a.num.scale(&b.den)? == b.num.scale(&a.den)?)
}

impl PartialEq for FractionalIdeal {
    fn eq(&self, other: &Self) -> bool {
        frac_equal(self, other).unwrap_or(false)
    }
}

impl fmt::Display for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_monomial().is_some_and(|m| m.is_one()) {
            return write!(f, "{}", self.num);
        }
        let d = self.den.to_string();
        if self.den.lift().len() > 1 {
            write!(f, "{} / ({d})", self.num)
        } else {
            write!(f, "{} / {d}", self.num)
        }
    }
}

#[derive(Clone, Debug)]
enum StarKind {
    Trivial,
    SigmaF(Box<ClosureOp>),
    B(Box<ClosureOp>),
}

/// A finite-type semistar operation, exposed as a membership oracle.
#[derive(Clone, Debug)]
pub struct SemistarOp {
    name: String,
    ring: Arc<PresentedRing>,
    kind: StarKind,
}

impl SemistarOp {
    /// `A ↦ A`.
    pub fn trivial(ring: &Arc<PresentedRing>) -> Self {
        SemistarOp { name: "trivial".into(), ring: ring.clone(), kind: StarKind::Trivial }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Arc<PresentedRing> {
        &self.ring
    }

    /// The closure whose `π` this operation is, if any.
    pub fn underlying_closure(&self) -> Option<&ClosureOp> {
        match &self.kind {
            StarKind::Trivial => None,
            StarKind::SigmaF(c) | StarKind::B(c) => Some(c),
        }
    }

    /// Whether `f ∈ A_⋆`.
    pub fn member(&self, f: &Fraction, a: &FractionalIdeal) -> Result<Membership> {
        if !PresentedRing::same(&self.ring, a.ring()) || !PresentedRing::same(&self.ring, f.ring()) {
            return Err(Error::Ring(crate::RingError::RingMismatch));
        }
        match &self.kind {
            StarKind::Trivial => Ok(a.contains(f)?.into()),
            StarKind::SigmaF(c) | StarKind::B(c) => pi_member(c, f, a),
        }
    }
}

impl fmt::Display for SemistarOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// `f = r/z ∈ A_{π(c)}` iff `d r ∈ (z N)^c`, with `A = (1/d) N`.
pub fn pi_member(c: &ClosureOp, f: &Fraction, a: &FractionalIdeal) -> Result<Membership> {
    if !f.den.is_regular() {
        return Err(Error::NonRegular(f.den.to_string()));
    }
    let zn = a.num.scale(&f.den)?;
    c.member(&(&a.den * &f.num), &zn)
}

/// [`pi_member`] with the witness `x = d w` in place of `d`: checks
/// `x r ∈ (z x A)^c = (z w N)^c`.
pub fn pi_member_with_witness(c: &ClosureOp, f: &Fraction, a: &FractionalIdeal, w: &RingElement) -> Result<Membership> {
    if !w.is_regular() {
        return Err(Error::NonRegular(w.to_string()));
    }
    let x = &a.den * w;
    let zxa = a.num.scale(w)?.scale(&f.den)?;
    c.member(&(&x * &f.num), &zxa)
}

/// `σ_f(c)`: membership is [`pi_member`] on the fractional ideal itself.
pub fn sigma_f(c: &ClosureOp) -> SemistarOp {
    SemistarOp {
        name: format!("sigma_f({})", c.name()),
        ring: c.ring().clone(),
        kind: StarKind::SigmaF(Box::new(c.clone())),
    }
}

/// `κ(⋆)`: `r ∈ I^{κ(⋆)}` iff `r/1 ∈ (I, 1)_⋆`.
pub fn kappa(star: &SemistarOp) -> ClosureOp {
    ClosureOp::from_kappa(star.clone())
}

pub(crate) fn kappa_member(star: &SemistarOp, r: &RingElement, i: &Ideal) -> Result<Membership> {
    star.member(&Fraction::whole(r.clone()), &FractionalIdeal::from_ideal(i.clone()))
}

/// The b-operation, `σ_f` of integral closure; needs `J = 0`.
pub fn b_operation(ring: &Arc<PresentedRing>) -> Result<SemistarOp> {
    if !ring.is_polynomial_ring() {
        return Err(Error::Unsupported(format!(
            "the b-operation is defined here for polynomial rings only, {ring} has relations"
        )));
    }
    let c = ClosureOp::integral_monomial(ring)?;
    Ok(SemistarOp { name: "b".into(), ring: ring.clone(), kind: StarKind::B(Box::new(c)) })
}

/// Membership in `A_b`: exact for monomial `z N`, a bounded semi-decision
/// otherwise.
pub fn b_member(f: &Fraction, a: &FractionalIdeal) -> Result<Membership> {
    b_operation(a.ring())?.member(f, a)
}

/// Outcome of one correspondence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Passed { checks: usize },
    Failed { checks: usize, witness: String },
}

impl CheckOutcome {
    pub fn is_passed(&self) -> bool {
        matches!(self, CheckOutcome::Passed { .. })
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckOutcome::Passed { checks } => write!(f, "passed ({checks} checks)"),
            CheckOutcome::Failed { checks, witness } => write!(f, "failed after {checks} checks, witness {witness}"),
        }
    }
}

/// Sampling bounds for [`check_correspondence`].
#[derive(Clone, Debug)]
pub struct CorrespondenceConfig {
    pub seed: u64,
    pub samples: usize,
    pub max_gens: usize,
    pub max_degree: u32,
    /// Degree bound of the numerators `r` in the fraction sweep.
    pub fraction_degree: u32,
    /// Denominators `z` and `d` of the fraction sweep; `{1, x, y, xy}` in
    /// the first two variables (filtered by regularity) when `None`.
    pub denominators: Option<Vec<RingElement>>,
}

impl Default for CorrespondenceConfig {
    fn default() -> Self {
        CorrespondenceConfig {
            seed: 0x5eed,
            samples: 30,
            max_gens: 3,
            max_degree: 6,
            fraction_degree: 6,
            denominators: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorrespondenceReport {
    pub operation: String,
    pub seed: u64,
    /// `κ(σ_f(c)) = c` on sampled ideals.
    pub ideal_round_trip: CheckOutcome,
    /// `σ_f(κ(σ_f(c))) = σ_f(c)` on sampled fractions.
    pub fraction_round_trip: CheckOutcome,
    /// `σ_f` preserves the order of the chain in `order_chain`.
    pub order: CheckOutcome,
    pub order_chain: Vec<String>,
}

impl CorrespondenceReport {
    pub fn all_passed(&self) -> bool {
        self.ideal_round_trip.is_passed() && self.fraction_round_trip.is_passed() && self.order.is_passed()
    }
}

fn default_denominators(ring: &Arc<PresentedRing>) -> Vec<RingElement> {
    let mut out = vec![ring.one()];
    let vars = ring.variables();
    if let Some(x) = vars.first() {
        out.push(x.clone());
    }
    if let Some(y) = vars.get(1) {
        out.push(y.clone());
        out.push(&vars[0] * y);
    }
    out.into_iter().filter(|d| d.is_regular()).collect()
}

/// The ideal generated by the monomials of the box bounded by `i`'s
/// generator exponents that the oracle of `c` accepts.
fn sweep_ideal(c: &ClosureOp, i: &Ideal, m: &MonomialIdeal) -> Result<Ideal> {
    let ring = i.ring();
    let bound: Vec<u32> =
        (0..ring.nvars()).map(|k| m.generators().iter().map(|g| g.exponents()[k]).max().unwrap_or(0)).collect();
    let top = bound.iter().sum();
    let mut accepted = Vec::new();
    for mono in sample::monomials_up_to(ring.nvars(), top) {
        if mono.exponents().iter().zip(&bound).any(|(e, b)| e > b) {
            continue;
        }
        if accepted.iter().any(|g: &crate::poly::Monomial| g.divides(&mono)) {
            continue;
        }
        if c.member(&ring.monomial(&mono), i)? == Membership::Yes {
            accepted.push(mono);
        }
    }
    Ok(Ideal::from_monomials(ring, &MonomialIdeal::new(ring.nvars(), accepted))?)
}

/// Checks the correspondence on samples: (a) `κ(σ_f(c)) = c` on sampled
/// monomial ideals, where the left side is rebuilt from its membership
/// oracle; (b) `σ_f(κ(σ_f(c)))` and `σ_f(c)` agree on all monomial
/// fractions `r/z`; (c) `σ_f(identity) ≤ σ_f(c)`, and `σ_f(c) ≤ σ_f(radical)`
/// when `c` is known to lie below the radical.
pub fn check_correspondence(c: &ClosureOp, cfg: &CorrespondenceConfig) -> Result<CorrespondenceReport> {
    let ring = c.ring().clone();
    let n = ring.nvars();
    let mut rng = sample::rng(cfg.seed);
    let dens = cfg.denominators.clone().unwrap_or_else(|| default_denominators(&ring));
    for d in &dens {
        if !d.is_regular() {
            return Err(Error::NonRegular(d.to_string()));
        }
    }

    let star = sigma_f(c);
    let kc = kappa(&star);
    let star2 = sigma_f(&kc);

    let mut chain = vec![ClosureOp::identity(&ring), c.clone()];
    if c.is_below_radical() {
        chain.push(ClosureOp::radical(&ring));
    }
    let chain_stars: Vec<SemistarOp> = chain.iter().map(sigma_f).collect();

    let samples: Vec<MonomialIdeal> =
        (0..cfg.samples).map(|_| sample::random_monomial_ideal(&mut rng, n, cfg.max_gens, cfg.max_degree)).collect();
    let numerators = sample::monomials_up_to(n, cfg.fraction_degree);

    let mut round_ideal = CheckOutcome::Passed { checks: 0 };
    let mut round_frac = CheckOutcome::Passed { checks: 0 };
    let mut order = CheckOutcome::Passed { checks: 0 };
    let bump = |o: &mut CheckOutcome| {
        if let CheckOutcome::Passed { checks } = o {
            *checks += 1;
        }
    };

    for m in &samples {
        let i = Ideal::from_monomials(&ring, m)?;

        if round_ideal.is_passed() {
            let expected = c.apply(&i)?;
            let swept = sweep_ideal(&kc, &i, m)?;
            if swept == expected {
                bump(&mut round_ideal);
            } else if let CheckOutcome::Passed { checks } = round_ideal {
                round_ideal = CheckOutcome::Failed {
                    checks: checks + 1,
                    witness: format!("I={i}: c gives {expected}, kappa(sigma_f(c)) gives {swept}"),
                };
            }
        }

        for d in &dens {
            let a = FractionalIdeal::new(i.clone(), d.clone())?;
            for z in &dens {
                for r in &numerators {
                    let f = Fraction::new(ring.monomial(r), z.clone())?;
                    if round_frac.is_passed() {
                        let lhs = star2.member(&f, &a)?;
                        let rhs = star.member(&f, &a)?;
                        if lhs == rhs {
                            bump(&mut round_frac);
                        } else if let CheckOutcome::Passed { checks } = round_frac {
                            round_frac = CheckOutcome::Failed {
                                checks: checks + 1,
                                witness: format!("A={a}, f={f}: {lhs} vs {rhs}"),
                            };
                        }
                    }
                    if order.is_passed() {
                        let answers = chain_stars.iter().map(|s| s.member(&f, &a)).collect::<Result<Vec<_>>>()?;
                        let broken = answers.windows(2).position(|w| w[0] == Membership::Yes && w[1] == Membership::No);
                        match broken {
                            None => bump(&mut order),
                            Some(k) => {
                                if let CheckOutcome::Passed { checks } = order {
                                    order = CheckOutcome::Failed {
                                        checks: checks + 1,
                                        witness: format!(
                                            "A={a}, f={f}: in sigma_f({}) but not in sigma_f({})",
                                            chain[k].name(),
                                            chain[k + 1].name()
                                        ),
                                    };
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    Ok(CorrespondenceReport {
        operation: c.name().to_string(),
        seed: cfg.seed,
        ideal_round_trip: round_ideal,
        fraction_round_trip: round_frac,
        order,
        order_chain: chain.iter().map(|o| o.name().to_string()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn qq(names: &[&str]) -> Arc<PresentedRing> {
        PresentedRing::polynomial_ring(Field::Rational, names).unwrap()
    }

    fn frac(ring: &Arc<PresentedRing>, num: &[&str], den: &str) -> FractionalIdeal {
        FractionalIdeal::new(ring.ideal(num).unwrap(), ring.parse_element(den).unwrap()).unwrap()
    }

    fn fraction(ring: &Arc<PresentedRing>, r: &str, z: &str) -> Fraction {
        Fraction::new(ring.parse_element(r).unwrap(), ring.parse_element(z).unwrap()).unwrap()
    }

    #[test]
    fn equality_and_scaling() {
        let r = qq(&["x", "y"]);
        assert!(frac_equal(&frac(&r, &["x"], "1"), &frac(&r, &["x^2"], "x")).unwrap());
        assert!(!frac_equal(&frac(&r, &["x"], "1"), &frac(&r, &["y"], "1")).unwrap());
        let scaled = frac(&r, &["x", "y"], "1").scale(&fraction(&r, "x", "1")).unwrap();
        assert_eq!(scaled.to_string(), "(x^2, x*y)");
    }

    #[test]
    fn common_variable_factors_cancel() {
        let r = qq(&["x", "y"]);
        let a = frac(&r, &["x^2", "x*y"], "x");
        assert_eq!(a.to_string(), "(x, y)");
        let b = frac(&r, &["x^2", "y^2"], "y");
        assert_eq!(b.to_string(), "(x^2, y^2) / y");
    }

    #[test]
    fn non_regular_denominator_is_rejected() {
        let r = PresentedRing::parse(Field::Rational, &["x", "y", "z"], &["x^2", "x*y"]).unwrap();
        let err = FractionalIdeal::new(r.ideal(&["z"]).unwrap(), r.parse_element("x").unwrap()).unwrap_err();
        assert_eq!(err, Error::NonRegular("x".into()));
    }

    #[test]
    fn pi_membership() {
        let r = qq(&["x", "y"]);
        let int = ClosureOp::integral_monomial(&r).unwrap();
        let a = frac(&r, &["x^2", "y^2"], "y");
        assert_eq!(pi_member(&int, &fraction(&r, "x", "1"), &a).unwrap(), Membership::Yes);
        let a = frac(&r, &["x^3", "y^3"], "1");
        assert_eq!(pi_member(&int, &fraction(&r, "x*y", "1"), &a).unwrap(), Membership::No);
        let id = ClosureOp::identity(&r);
        let a = frac(&r, &["x"], "1");
        assert_eq!(pi_member(&id, &fraction(&r, "x*y", "1"), &a).unwrap(), Membership::Yes);
        assert_eq!(pi_member(&id, &fraction(&r, "y", "1"), &a).unwrap(), Membership::No);
    }

    #[test]
    fn b_operation_examples() {
        let r = qq(&["x", "y"]);
        assert_eq!(b_member(&fraction(&r, "x*y", "1"), &frac(&r, &["x^2", "y^2"], "1")).unwrap(), Membership::Yes);
        assert_eq!(b_member(&fraction(&r, "x", "1"), &frac(&r, &["x"], "1")).unwrap(), Membership::Yes);
        assert_eq!(b_member(&fraction(&r, "x*y", "1"), &frac(&r, &["x^3", "y^3"], "1")).unwrap(), Membership::No);
        let s = PresentedRing::parse(Field::Rational, &["x"], &["x^2"]).unwrap();
        assert!(b_operation(&s).is_err());
    }

    #[test]
    fn kappa_of_sigma_f() {
        let r = qq(&["x", "y"]);
        let int = ClosureOp::integral_monomial(&r).unwrap();
        let k = kappa(&sigma_f(&int));
        let i = r.ideal(&["x^2", "y^2"]).unwrap();
        assert_eq!(k.apply(&i).unwrap().to_string(), "(x^2, x*y, y^2)");
        assert_eq!(k.member(&r.parse_element("x*y").unwrap(), &i).unwrap(), Membership::Yes);

        let trivial = kappa(&SemistarOp::trivial(&r));
        assert_eq!(trivial.apply(&i).unwrap(), i);
        assert_eq!(trivial.member(&r.parse_element("x*y").unwrap(), &i).unwrap(), Membership::No);

        let rad = kappa(&sigma_f(&ClosureOp::radical(&r)));
        let x2 = r.ideal(&["x^2"]).unwrap();
        assert_eq!(rad.member(&r.parse_element("x").unwrap(), &x2).unwrap(), Membership::Yes);
    }

    #[test]
    fn pi_is_independent_of_representatives() {
        let r = qq(&["x", "y"]);
        let int = ClosureOp::integral_monomial(&r).unwrap();
        let a = frac(&r, &["x^2", "y^2"], "y");
        let f = fraction(&r, "x", "1");
        let base = pi_member(&int, &f, &a).unwrap();
        for w in ["x", "y", "x*y", "x + y"] {
            let w = r.parse_element(w).unwrap();
            assert_eq!(pi_member_with_witness(&int, &f, &a, &w).unwrap(), base);
            assert_eq!(pi_member(&int, &f.expand(&w).unwrap(), &a).unwrap(), base);
        }
    }

    #[test]
    fn correspondence_for_identity() {
        let r = qq(&["x", "y"]);
        let cfg = CorrespondenceConfig { samples: 4, max_degree: 3, fraction_degree: 3, ..Default::default() };
        let report = check_correspondence(&ClosureOp::identity(&r), &cfg).unwrap();
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.order_chain, ["identity", "identity", "radical"]);
    }
}
