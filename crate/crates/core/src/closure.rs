//! Closure operations on the ideals of a presented ring.
//!
//! A [`ClosureOp`] pairs a membership oracle with an optional closure
//! computer. Oracles built on bounded searches are sound semi-decisions:
//! they answer [`Membership::Yes`] only with a certificate and
//! [`Membership::Unknown`] otherwise.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::poly::{Monomial, Polynomial};
use crate::rings::{Ideal, PresentedRing, RingElement};
use crate::sample;
use crate::semistar::SemistarOp;

/// Answer of a membership oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Yes,
    No,
    Unknown,
}

impl From<bool> for Membership {
    fn from(b: bool) -> Self {
        if b {
            Membership::Yes
        } else {
            Membership::No
        }
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::Yes => "true",
            Membership::No => "false",
            Membership::Unknown => "unknown",
        })
    }
}

/// How far a computed answer can be trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exactness {
    Exact,
    /// Contained in the true value, possibly strictly.
    UnderApproximation,
    /// Positive answers are certified by a search up to `bound`.
    SemiDecision {
        bound: u32,
    },
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exactness::Exact => write!(f, "exact"),
            Exactness::UnderApproximation => write!(f, "under-approximation"),
            Exactness::SemiDecision { bound } => write!(f, "semi-decision(bound={bound})"),
        }
    }
}

/// Declared properties of an operation. The axiom checker tests them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claims {
    /// Idempotent (a closure rather than a preclosure).
    pub idempotent: bool,
    pub finite_type: bool,
    pub weakly_prime: bool,
    pub standard: bool,
}

/// Regular elements used as the finite index set of a witnessed
/// standardization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSet {
    elements: Vec<RingElement>,
}

impl WitnessSet {
    /// Every element is checked with [`RingElement::is_regular`].
    pub fn new(elements: Vec<RingElement>) -> Result<Self> {
        let mut out: Vec<RingElement> = Vec::new();
        for w in elements {
            if !w.is_regular() {
                return Err(Error::NonRegular(w.to_string()));
            }
            if let Some(first) = out.first() {
                if !PresentedRing::same(first.ring(), w.ring()) {
                    return Err(Error::Ring(crate::RingError::RingMismatch));
                }
            }
            if !out.contains(&w) {
                out.push(w);
            }
        }
        Ok(WitnessSet { elements: out })
    }

    /// The variables and their pairwise products that are regular.
    pub fn default_pool(ring: &Arc<PresentedRing>) -> Self {
        let vars = ring.variables();
        let mut pool: Vec<RingElement> = vars.clone();
        for i in 0..vars.len() {
            for j in i + 1..vars.len() {
                pool.push(&vars[i] * &vars[j]);
            }
        }
        let elements = pool.into_iter().filter(|w| !w.is_zero() && w.is_regular()).collect();
        WitnessSet { elements }
    }

    pub fn elements(&self) -> &[RingElement] {
        &self.elements
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &RingElement) -> bool {
        self.elements.contains(w)
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &WitnessSet) -> bool {
        self.elements.iter().all(|w| other.contains(w))
    }
}

impl fmt::Display for WitnessSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(|w| w.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Clone, Debug)]
enum Kind {
    Identity,
    Radical,
    IntegralMonomial { power_bound: u32 },
    Frobenius { e_max: u32 },
    Finitized(Box<ClosureOp>),
    Standardized { inner: Box<ClosureOp>, witnesses: WitnessSet },
    Kappa(Box<SemistarOp>),
}

/// A named closure (or preclosure) operation on the ideals of one ring.
#[derive(Clone, Debug)]
pub struct ClosureOp {
    name: String,
    ring: Arc<PresentedRing>,
    kind: Kind,
    claims: Claims,
}

const ALL_CLAIMS: Claims = Claims { idempotent: true, finite_type: true, weakly_prime: true, standard: true };

/// Default bound `k` for the integral membership test `f^k ∈ I^k` on
/// non-monomial ideals.
pub const DEFAULT_POWER_BOUND: u32 = 4;

impl ClosureOp {
    pub fn identity(ring: &Arc<PresentedRing>) -> Self {
        ClosureOp { name: "identity".into(), ring: ring.clone(), kind: Kind::Identity, claims: ALL_CLAIMS }
    }

    pub fn radical(ring: &Arc<PresentedRing>) -> Self {
        ClosureOp {
            name: "radical".into(),
            ring: ring.clone(),
            kind: Kind::Radical,
            claims: Claims { standard: false, ..ALL_CLAIMS },
        }
    }

    /// Integral closure; requires a polynomial ring (`J = 0`).
    pub fn integral_monomial(ring: &Arc<PresentedRing>) -> Result<Self> {
        Self::integral_with_bound(ring, DEFAULT_POWER_BOUND)
    }

    pub fn integral_with_bound(ring: &Arc<PresentedRing>, power_bound: u32) -> Result<Self> {
        if !ring.is_polynomial_ring() {
            return Err(Error::Capability(format!("integral closure needs a polynomial ring, {ring} has relations")));
        }
        Ok(ClosureOp {
            name: "integral".into(),
            ring: ring.clone(),
            kind: Kind::IntegralMonomial { power_bound: power_bound.max(1) },
            claims: ALL_CLAIMS,
        })
    }

    /// Frobenius closure with the search bound `e_max`; requires `F_p`.
    pub fn frobenius(ring: &Arc<PresentedRing>, e_max: u32) -> Result<Self> {
        if ring.field().characteristic() == 0 {
            return Err(Error::Capability(format!(
                "frobenius closure needs a prime field, {} has characteristic 0",
                ring.field()
            )));
        }
        Ok(ClosureOp {
            name: format!("frobenius(e_max={e_max})"),
            ring: ring.clone(),
            kind: Kind::Frobenius { e_max },
            claims: ALL_CLAIMS,
        })
    }

    /// A built-in by its identifier: `identity`, `radical`, `integral`
    /// or `frobenius`.
    pub fn builtin(name: &str, ring: &Arc<PresentedRing>, e_max: Option<u32>) -> Result<Self> {
        match name {
            "identity" => Ok(Self::identity(ring)),
            "radical" => Ok(Self::radical(ring)),
            "integral" | "integral_monomial" => Self::integral_monomial(ring),
            "frobenius" => Self::frobenius(ring, e_max.unwrap_or(1)),
            other => Err(Error::Unsupported(format!("unknown closure '{other}'"))),
        }
    }

    pub(crate) fn from_kappa(star: SemistarOp) -> Self {
        let claims = match star.underlying_closure() {
            Some(c) => c.claims,
            None => ALL_CLAIMS,
        };
        ClosureOp {
            name: format!("kappa({})", star.name()),
            ring: star.ring().clone(),
            kind: Kind::Kappa(Box::new(star)),
            claims,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Arc<PresentedRing> {
        &self.ring
    }

    pub fn claims(&self) -> Claims {
        self.claims
    }

    /// Whether positive oracle answers are the only certified ones.
    pub fn is_semi_decision(&self) -> bool {
        match &self.kind {
            Kind::Frobenius { .. } => true,
            Kind::Finitized(c) => c.is_semi_decision(),
            Kind::Standardized { inner, .. } => inner.is_semi_decision(),
            Kind::Kappa(star) => star.underlying_closure().is_some_and(|c| c.is_semi_decision()),
            _ => false,
        }
    }

    /// Whether `I^c ⊆ rad(I)` is known for every `I`: identity, integral
    /// and Frobenius closure, and finitizations of those.
    pub fn is_below_radical(&self) -> bool {
        match &self.kind {
            Kind::Identity | Kind::Radical | Kind::IntegralMonomial { .. } | Kind::Frobenius { .. } => true,
            Kind::Finitized(c) => c.is_below_radical(),
            Kind::Standardized { .. } => false,
            Kind::Kappa(star) => star.underlying_closure().is_none_or(|c| c.is_below_radical()),
        }
    }

    /// Exactness of [`ClosureOp::apply`] and [`ClosureOp::member`] on `i`.
    pub fn exactness_for(&self, i: &Ideal) -> Exactness {
        match &self.kind {
            Kind::Identity | Kind::Radical => Exactness::Exact,
            Kind::IntegralMonomial { power_bound } => {
                if i.is_monomial() {
                    Exactness::Exact
                } else {
                    Exactness::SemiDecision { bound: *power_bound }
                }
            }
            Kind::Frobenius { e_max } => Exactness::SemiDecision { bound: *e_max },
            Kind::Finitized(c) => c.exactness_for(i),
            Kind::Standardized { inner, .. } => match inner.exactness_for(i) {
                Exactness::Exact => Exactness::UnderApproximation,
                other => other,
            },
            Kind::Kappa(star) => match star.underlying_closure() {
                Some(c) => c.exactness_for(i),
                None => Exactness::Exact,
            },
        }
    }

    fn check_ring(&self, i: &Ideal) -> Result<()> {
        if PresentedRing::same(&self.ring, i.ring()) {
            Ok(())
        } else {
            Err(Error::Ring(crate::RingError::RingMismatch))
        }
    }

    /// Whether a closure computer exists for `i`.
    pub fn can_apply(&self, i: &Ideal) -> bool {
        match &self.kind {
            Kind::Identity => true,
            Kind::Radical | Kind::IntegralMonomial { .. } => i.is_monomial(),
            Kind::Frobenius { .. } => false,
            Kind::Finitized(c) => c.can_apply(i),
            Kind::Standardized { inner, witnesses } => {
                inner.can_apply(i)
                    && witnesses.elements.iter().all(|w| i.scale(w).map(|wi| inner.can_apply(&wi)).unwrap_or(false))
            }
            Kind::Kappa(star) => match star.underlying_closure() {
                Some(c) => c.can_apply(i),
                None => true,
            },
        }
    }

    /// `I^c`.
    pub fn apply(&self, i: &Ideal) -> Result<Ideal> {
        self.check_ring(i)?;
        match &self.kind {
            Kind::Identity => Ok(i.clone()),
            Kind::Radical => {
                let m = i.lift_monomial().ok_or_else(|| {
                    Error::Unsupported(format!(
                        "radical closure is computed for monomial ideals only; {i} is not. \
                         Use member(radical, f, I) for an exact membership test"
                    ))
                })?;
                Ok(Ideal::from_monomials(&self.ring, &m.radical())?)
            }
            Kind::IntegralMonomial { .. } => {
                let m = i.lift_monomial().ok_or_else(|| {
                    Error::Unsupported(format!(
                        "integral closure is computed for monomial ideals only; {i} is not. \
                         Use member(integral, f, I) for the bounded semi-decision"
                    ))
                })?;
                Ok(Ideal::from_monomials(&self.ring, &m.integral_closure())?)
            }
            Kind::Frobenius { .. } => Err(Error::Unsupported(format!(
                "{} has no closure computer. Use member({}, f, I) for the bounded semi-decision",
                self.name, self.name
            ))),
            Kind::Finitized(c) => c.apply(i),
            Kind::Standardized { inner, witnesses } => {
                let mut acc = inner.apply(i)?;
                for w in &witnesses.elements {
                    let part = inner.apply(&i.scale(w)?)?.colon(w)?;
                    acc = acc.sum(&part)?;
                }
                Ok(acc)
            }
            Kind::Kappa(star) => match star.underlying_closure() {
                Some(c) => c.apply(i),
                None => Ok(i.clone()),
            },
        }
    }

    /// Membership oracle for `f ∈ I^c`.
    pub fn member(&self, f: &RingElement, i: &Ideal) -> Result<Membership> {
        self.check_ring(i)?;
        if i.contains(f)? {
            return Ok(Membership::Yes);
        }
        match &self.kind {
            Kind::Identity => Ok(Membership::No),
            Kind::Radical => Ok(i.radical_contains(f)?.into()),
            Kind::IntegralMonomial { power_bound } => match i.lift_monomial() {
                Some(m) => Ok(f.lift().terms().iter().all(|(t, _)| m.integral_contains(t)).into()),
                None => {
                    for k in 2..=*power_bound {
                        if i.power(k).contains(&f.pow(k))? {
                            return Ok(Membership::Yes);
                        }
                    }
                    Ok(Membership::Unknown)
                }
            },
            Kind::Frobenius { e_max } => {
                let p = self.ring.field().characteristic();
                let mut q: u32 = 1;
                for _ in 0..*e_max {
                    q = match q.checked_mul(p) {
                        Some(v) => v,
                        None => break,
                    };
                    let bracket: Vec<Polynomial> = i.generators().iter().map(|g| g.frobenius_power(q)).collect();
                    let bracket = Ideal::from_polys(&self.ring, bracket)?;
                    let fq = self.ring.element(&f.lift().frobenius_power(q))?;
                    if bracket.contains(&fq)? {
                        return Ok(Membership::Yes);
                    }
                }
                Ok(Membership::Unknown)
            }
            Kind::Finitized(c) => c.member(f, i),
            Kind::Standardized { inner, witnesses } => {
                if self.can_apply(i) {
                    return Ok(self.apply(i)?.contains(f)?.into());
                }
                if inner.member(f, i)? == Membership::Yes {
                    return Ok(Membership::Yes);
                }
                for w in &witnesses.elements {
                    if inner.member(&(w * f), &i.scale(w)?)? == Membership::Yes {
                        return Ok(Membership::Yes);
                    }
                }
                Ok(Membership::Unknown)
            }
            Kind::Kappa(star) => crate::semistar::kappa_member(star, f, i),
        }
    }

    /// The largest finite-type preclosure below `self`. Every representable
    /// ideal is finitely generated, so the result agrees with `self`
    /// pointwise; it is tagged finite type.
    pub fn finitize(&self) -> ClosureOp {
        ClosureOp {
            name: format!("finitize({})", self.name),
            ring: self.ring.clone(),
            kind: Kind::Finitized(Box::new(self.clone())),
            claims: Claims { finite_type: true, ..self.claims },
        }
    }

    /// `I ↦ Σ_{w ∈ W ∪ {1}} ((wI)^c : w)`, contained in the standardization
    /// of `self`.
    pub fn standardize_witnessed(&self, witnesses: &WitnessSet) -> Result<ClosureOp> {
        if !self.claims.weakly_prime {
            return Err(Error::Capability(format!(
                "{} is not weakly prime; standardization needs a weakly prime operation",
                self.name
            )));
        }
        for w in &witnesses.elements {
            if !PresentedRing::same(w.ring(), &self.ring) {
                return Err(Error::Ring(crate::RingError::RingMismatch));
            }
            if !w.is_regular() {
                return Err(Error::NonRegular(w.to_string()));
            }
        }
        let witnesses = WitnessSet { elements: witnesses.elements.iter().filter(|w| !w.is_unit()).cloned().collect() };
        Ok(ClosureOp {
            name: format!("standardize({}; witnesses={})", self.name, witnesses),
            ring: self.ring.clone(),
            kind: Kind::Standardized { inner: Box::new(self.clone()), witnesses },
            claims: Claims {
                idempotent: false,
                finite_type: self.claims.finite_type,
                weakly_prime: true,
                standard: true,
            },
        })
    }
}

impl fmt::Display for ClosureOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// The axioms checked by [`check_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    Extension,
    OrderPreservation,
    Idempotence,
    WeaklyPrime,
    Standard,
}

impl Axiom {
    pub const ALL: [Axiom; 5] =
        [Axiom::Extension, Axiom::OrderPreservation, Axiom::Idempotence, Axiom::WeaklyPrime, Axiom::Standard];

    pub fn name(&self) -> &'static str {
        match self {
            Axiom::Extension => "extension",
            Axiom::OrderPreservation => "order-preservation",
            Axiom::Idempotence => "idempotence",
            Axiom::WeaklyPrime => "weakly-prime",
            Axiom::Standard => "standard",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A concrete violation that can be replayed against the operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomWitness {
    pub axiom: Axiom,
    /// The ideal `I`.
    pub ideal: Ideal,
    /// The smaller ideal `J ⊆ I` for order preservation.
    pub smaller: Option<Ideal>,
    /// The regular element `w` for the weakly-prime and standard axioms.
    pub element: Option<RingElement>,
    /// An element separating the two sides, when only an oracle exists.
    pub separating: Option<RingElement>,
}

impl AxiomWitness {
    /// Re-runs the check; `true` when the violation is reproduced.
    pub fn replay(&self, c: &ClosureOp) -> Result<bool> {
        let case = Case { ideal: self.ideal.clone(), smaller: self.smaller.clone(), w: self.element.clone() };
        Ok(match &self.separating {
            Some(f) => violates_at(c, self.axiom, &case, f)?,
            None => violates(c, self.axiom, &case)?,
        })
    }
}

impl fmt::Display for AxiomWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(w) = &self.element {
            parts.push(format!("w={w}"));
        }
        parts.push(format!("I={}", self.ideal));
        if let Some(j) = &self.smaller {
            parts.push(format!("J={j}"));
        }
        if let Some(s) = &self.separating {
            parts.push(format!("f={s}"));
        }
        write!(f, "({})", parts.join(", "))
    }
}

/// Outcome for one axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Passed {
        samples: usize,
    },
    Failed(Box<AxiomWitness>),
    /// No violation found, but the oracle cannot certify the property.
    NotRefuted {
        samples: usize,
        reason: String,
    },
}

impl Verdict {
    pub fn is_failed(&self) -> bool {
        matches!(self, Verdict::Failed(_))
    }

    pub fn is_passed(&self) -> bool {
        matches!(self, Verdict::Passed { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Passed { samples } => write!(f, "passed ({samples} samples)"),
            Verdict::Failed(w) => write!(f, "failed, witness {w}"),
            Verdict::NotRefuted { samples, reason } => write!(f, "not refuted ({samples} samples; {reason})"),
        }
    }
}

/// Sampling bounds for [`check_axioms`].
#[derive(Clone, Debug)]
pub struct AxiomConfig {
    pub seed: u64,
    pub samples: usize,
    pub max_gens: usize,
    pub max_degree: u32,
    /// Degree bound of the test elements used when only an oracle exists.
    pub element_degree: u32,
    /// Regular elements for the weakly-prime and standard axioms; the
    /// default pool when `None`.
    pub witnesses: Option<WitnessSet>,
}

impl Default for AxiomConfig {
    fn default() -> Self {
        AxiomConfig { seed: 0x5eed, samples: 100, max_gens: 3, max_degree: 4, element_degree: 3, witnesses: None }
    }
}

/// Per-axiom verdicts with the evidence bounds used.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub operation: String,
    pub seed: u64,
    pub samples: usize,
    pub witnesses: Vec<String>,
    pub verdicts: Vec<(Axiom, Verdict)>,
}

impl AxiomReport {
    pub fn verdict(&self, axiom: Axiom) -> &Verdict {
        &self.verdicts.iter().find(|(a, _)| *a == axiom).expect("every axiom is reported").1
    }

    pub fn any_failed(&self) -> bool {
        self.verdicts.iter().any(|(_, v)| v.is_failed())
    }
}

#[derive(Clone, Debug)]
struct Case {
    ideal: Ideal,
    smaller: Option<Ideal>,
    w: Option<RingElement>,
}

/// Tests the five axioms on seeded monomial samples. The first samples are
/// the ideals `(x_i)`, then random ones; order pairs use a random subideal.
/// Violations are shrunk greedily and verified by replay.
pub fn check_axioms(c: &ClosureOp, cfg: &AxiomConfig) -> Result<AxiomReport> {
    let ring = c.ring().clone();
    let n = ring.nvars();
    let witnesses = cfg.witnesses.clone().unwrap_or_else(|| WitnessSet::default_pool(&ring));
    let mut rng = sample::rng(cfg.seed);

    let mut monomial_samples: Vec<(MonomialIdeal, MonomialIdeal)> = Vec::with_capacity(cfg.samples);
    for k in 0..cfg.samples {
        let i = if k < n {
            MonomialIdeal::variables(n, &[k])
        } else {
            sample::random_monomial_ideal(&mut rng, n, cfg.max_gens, cfg.max_degree)
        };
        let j = sample::random_subideal(&mut rng, &i, 2);
        monomial_samples.push((i, j));
    }

    let oracle_only = c.is_semi_decision();
    let mut failures: Vec<Option<AxiomWitness>> = vec![None; Axiom::ALL.len()];
    let mut counted = [0usize; 5];

    for (mi, mj) in &monomial_samples {
        let ideal = Ideal::from_monomials(&ring, mi)?;
        let smaller = Ideal::from_monomials(&ring, mj)?;
        for (ax_idx, &axiom) in Axiom::ALL.iter().enumerate() {
            if failures[ax_idx].is_some() {
                continue;
            }
            if axiom == Axiom::Idempotence && (oracle_only || !c.can_apply(&ideal)) {
                continue;
            }
            let cases: Vec<Case> = match axiom {
                Axiom::WeaklyPrime | Axiom::Standard => witnesses
                    .elements
                    .iter()
                    .map(|w| Case { ideal: ideal.clone(), smaller: None, w: Some(w.clone()) })
                    .collect(),
                Axiom::OrderPreservation => {
                    vec![Case { ideal: ideal.clone(), smaller: Some(smaller.clone()), w: None }]
                }
                _ => vec![Case { ideal: ideal.clone(), smaller: None, w: None }],
            };
            counted[ax_idx] += 1;
            for case in cases {
                if let Some(witness) = find_violation(c, axiom, &case, cfg.element_degree)? {
                    let shrunk = shrink(c, witness, &witnesses)?;
                    failures[ax_idx] = Some(shrunk);
                    break;
                }
            }
        }
    }

    let verdicts = Axiom::ALL
        .iter()
        .enumerate()
        .map(|(k, &axiom)| {
            let verdict = match failures[k].take() {
                Some(w) => Verdict::Failed(Box::new(w)),
                None if axiom == Axiom::Idempotence && oracle_only => Verdict::NotRefuted {
                    samples: 0,
                    reason: "semi-decision oracle cannot certify fixed points".into(),
                },
                None if oracle_only => Verdict::NotRefuted {
                    samples: counted[k],
                    reason: format!("checked through a bounded oracle on elements of degree <= {}", cfg.element_degree),
                },
                None => Verdict::Passed { samples: counted[k] },
            };
            (axiom, verdict)
        })
        .collect();

    Ok(AxiomReport {
        operation: c.name().to_string(),
        seed: cfg.seed,
        samples: cfg.samples,
        witnesses: witnesses.elements.iter().map(|w| w.to_string()).collect(),
        verdicts,
    })
}

/// Checks one case, through the closure computer when it exists and
/// through test elements otherwise.
fn find_violation(c: &ClosureOp, axiom: Axiom, case: &Case, element_degree: u32) -> Result<Option<AxiomWitness>> {
    let to_witness = |separating: Option<RingElement>| AxiomWitness {
        axiom,
        ideal: case.ideal.clone(),
        smaller: case.smaller.clone(),
        element: case.w.clone(),
        separating,
    };
    if computable(c, axiom, case) {
        return Ok(violates(c, axiom, case)?.then(|| to_witness(None)));
    }
    for f in test_elements(case, element_degree) {
        if violates_at(c, axiom, case, &f)? {
            return Ok(Some(to_witness(Some(f))));
        }
    }
    Ok(None)
}

fn computable(c: &ClosureOp, axiom: Axiom, case: &Case) -> bool {
    if c.is_semi_decision() || !c.can_apply(&case.ideal) {
        return false;
    }
    match (axiom, &case.smaller, &case.w) {
        (Axiom::OrderPreservation, Some(j), _) => c.can_apply(j),
        (Axiom::WeaklyPrime | Axiom::Standard, _, Some(w)) => {
            case.ideal.scale(w).map(|wi| c.can_apply(&wi)).unwrap_or(false)
        }
        _ => true,
    }
}

/// Monomials up to `degree` and the generators of the ideals in the case.
fn test_elements(case: &Case, degree: u32) -> Vec<RingElement> {
    let ring = case.ideal.ring();
    let mut out: Vec<RingElement> =
        sample::monomials_up_to(ring.nvars(), degree).iter().map(|m| ring.monomial(m)).collect();
    out.extend(case.ideal.generator_elements());
    if let Some(j) = &case.smaller {
        out.extend(j.generator_elements());
    }
    let mut seen = Vec::new();
    out.retain(|f| {
        if f.is_zero() || seen.contains(f) {
            false
        } else {
            seen.push(f.clone());
            true
        }
    });
    out
}

/// Exact check through the closure computer.
fn violates(c: &ClosureOp, axiom: Axiom, case: &Case) -> Result<bool> {
    let i = &case.ideal;
    let ic = c.apply(i)?;
    Ok(match axiom {
        Axiom::Extension => !ic.contains_ideal(i)?,
        Axiom::OrderPreservation => {
            let j = case.smaller.as_ref().expect("order case has a subideal");
            !ic.contains_ideal(&c.apply(j)?)?
        }
        Axiom::Idempotence => c.apply(&ic)? != ic,
        Axiom::WeaklyPrime => {
            let w = case.w.as_ref().expect("weakly prime case has an element");
            !c.apply(&i.scale(w)?)?.contains_ideal(&ic.scale(w)?)?
        }
        Axiom::Standard => {
            let w = case.w.as_ref().expect("standard case has an element");
            c.apply(&i.scale(w)?)?.colon(w)? != ic
        }
    })
}

/// Oracle check at one test element; only a definite `Yes` against a
/// definite `No` counts as a violation.
fn violates_at(c: &ClosureOp, axiom: Axiom, case: &Case, f: &RingElement) -> Result<bool> {
    use Membership::{No, Yes};
    let i = &case.ideal;
    Ok(match axiom {
        Axiom::Extension => i.contains(f)? && c.member(f, i)? == No,
        Axiom::OrderPreservation => {
            let j = case.smaller.as_ref().expect("order case has a subideal");
            c.member(f, j)? == Yes && c.member(f, i)? == No
        }
        Axiom::Idempotence => false,
        Axiom::WeaklyPrime => {
            let w = case.w.as_ref().expect("weakly prime case has an element");
            c.member(f, i)? == Yes && c.member(&(w * f), &i.scale(w)?)? == No
        }
        Axiom::Standard => {
            let w = case.w.as_ref().expect("standard case has an element");
            let lhs = c.member(&(w * f), &i.scale(w)?)?;
            let rhs = c.member(f, i)?;
            (lhs == Yes && rhs == No) || (lhs == No && rhs == Yes)
        }
    })
}

fn replays(c: &ClosureOp, w: &AxiomWitness) -> bool {
    w.replay(c).unwrap_or(false)
}

/// Greedy shrinking: drop generators, divide generators by variables and
/// replace `w` by a witness that divides it, as long as the violation
/// persists.
fn shrink(c: &ClosureOp, mut witness: AxiomWitness, pool: &WitnessSet) -> Result<AxiomWitness> {
    let ring = c.ring().clone();
    loop {
        let mut improved = false;
        for candidate in shrink_candidates(&ring, &witness, pool)? {
            if replays(c, &candidate) {
                witness = candidate;
                improved = true;
                break;
            }
        }
        if !improved {
            return Ok(witness);
        }
    }
}

fn shrink_candidates(
    ring: &Arc<PresentedRing>,
    witness: &AxiomWitness,
    pool: &WitnessSet,
) -> Result<Vec<AxiomWitness>> {
    let mut out = Vec::new();
    let contains_smaller = |i: &Ideal| -> Result<bool> {
        match &witness.smaller {
            Some(j) => Ok(i.contains_ideal(j)?),
            None => Ok(true),
        }
    };
    for gens in smaller_generator_sets(ring, witness.ideal.generators()) {
        let candidate = Ideal::from_polys(ring, gens)?;
        if candidate.is_unit() || candidate.is_zero() || !contains_smaller(&candidate)? {
            continue;
        }
        out.push(AxiomWitness { ideal: candidate, ..witness.clone() });
    }
    if let Some(j) = &witness.smaller {
        for gens in smaller_generator_sets(ring, j.generators()) {
            let candidate = Ideal::from_polys(ring, gens)?;
            if candidate.is_zero() || !witness.ideal.contains_ideal(&candidate)? {
                continue;
            }
            out.push(AxiomWitness { smaller: Some(candidate), ..witness.clone() });
        }
    }
    if let Some(w) = &witness.element {
        for v in pool.elements() {
            if v != w && v.lift().total_degree() < w.lift().total_degree() && w.lift().div_exact(v.lift()).is_some() {
                out.push(AxiomWitness { element: Some(v.clone()), ..witness.clone() });
            }
        }
    }
    Ok(out)
}

/// Generator lists with one generator dropped, or one monomial generator
/// divided by one of its variables.
fn smaller_generator_sets(ring: &Arc<PresentedRing>, gens: &[Polynomial]) -> Vec<Vec<Polynomial>> {
    let mut out = Vec::new();
    if gens.len() > 1 {
        for k in 0..gens.len() {
            let mut g = gens.to_vec();
            g.remove(k);
            out.push(g);
        }
    }
    let n = ring.nvars();
    for (k, g) in gens.iter().enumerate() {
        if !g.is_monomial() || g.total_degree() <= 1 {
            continue;
        }
        for v in g.lm().support() {
            let x = Monomial::var(n, v);
            let q = g.lm().div(&x).expect("variable in support");
            let mut next = gens.to_vec();
            next[k] = Polynomial::monomial(ring.ctx(), q);
            out.push(next);
        }
    }
    out
}
