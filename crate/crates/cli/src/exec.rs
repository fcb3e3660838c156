//! Executes a parsed session and collects one record per command.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use semistar_core::closure::{check_axioms, AxiomConfig, ClosureOp, Exactness, Membership, Verdict, WitnessSet};
use semistar_core::monomial::{associated_primes, monomial_primary_decomposition, PrimaryDecomposition};
use semistar_core::poly::{parse_polynomial, Polynomial};
use semistar_core::rings::{Ideal, PresentedRing, RingElement};
use semistar_core::semistar::{
    b_operation, check_correspondence, kappa, pi_member, sigma_f, CheckOutcome, CorrespondenceConfig, Fraction,
    FractionalIdeal, SemistarOp,
};
use semistar_core::stdrad::{standardized_radical, verify_decomposition, ComponentVerdict};
use semistar_core::Field;

use crate::session::{
    ClosureExpr, DecompositionExpr, ElementExpr, FieldSpec, FracExpr, IdealExpr, MemberOp, MemberTarget, PolyList,
    Query, Session, StarExpr, Stmt, WitnessRef,
};

pub const DEFAULT_SEED: u64 = 0x5eed;

/// Options shared by every command of a run.
#[derive(Clone, Debug)]
pub struct ExecConfig {
    pub seed: u64,
    /// Degree bound of sampled test elements and fraction numerators.
    pub degree_bound: Option<u32>,
    /// Stop after the first errored or failed command.
    pub fail_fast: bool,
    /// Extra regular elements added to the default witness pool.
    pub witnesses: Vec<String>,
}

impl Default for ExecConfig {
    fn default() -> Self {
        ExecConfig { seed: DEFAULT_SEED, degree_bound: None, fail_fast: false, witnesses: Vec::new() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
    Failed,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Ok => "ok",
            Status::Error => "error",
            Status::Failed => "failed",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub status: Status,
    pub exactness: String,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Value>,
    pub seed: u64,
    /// Human-readable rendering of the payload.
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("> {}\n", self.command);
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out.push_str(&format!("  [{}; {}]\n", self.status, self.exactness));
        out
    }
}

/// Whether a run succeeded: no command errored and no check failed.
pub fn succeeded(records: &[OutputRecord]) -> bool {
    records.iter().all(|r| r.status == Status::Ok)
}

#[derive(Debug)]
struct ExecError(String);

impl<E: std::error::Error> From<E> for ExecError {
    fn from(e: E) -> Self {
        ExecError(e.to_string())
    }
}

type EResult<T> = Result<T, ExecError>;

fn fail<T>(msg: impl Into<String>) -> EResult<T> {
    Err(ExecError(msg.into()))
}

#[derive(Clone)]
enum Object {
    Ring(Arc<PresentedRing>),
    Ideal(Ideal),
    Frac(FractionalIdeal),
    Closure(ClosureOp),
    Witnesses(WitnessSet),
}

/// Non-exact labels gathered while evaluating one command.
#[derive(Default)]
struct Labels(BTreeSet<String>);

impl Labels {
    fn add(&mut self, e: Exactness) {
        if e != Exactness::Exact {
            self.0.insert(e.to_string());
        }
    }

    fn note(&mut self, s: &str) {
        self.0.insert(s.to_string());
    }

    fn render(&self) -> String {
        if self.0.is_empty() {
            "exact".to_string()
        } else {
            self.0.iter().cloned().collect::<Vec<_>>().join("; ")
        }
    }
}

struct Outcome {
    status: Status,
    payload: Value,
    witnesses: Option<Value>,
    lines: Vec<String>,
}

impl Outcome {
    fn ok(payload: Value, lines: Vec<String>) -> Self {
        Outcome { status: Status::Ok, payload, witnesses: None, lines }
    }
}

struct Env<'a> {
    cfg: &'a ExecConfig,
    objects: HashMap<String, Object>,
    failed: BTreeSet<String>,
    ring: Option<Arc<PresentedRing>>,
}

/// Runs every statement. Declarations produce a record only when they
/// fail; commands always produce one.
pub fn execute(session: &Session, cfg: &ExecConfig) -> Vec<OutputRecord> {
    let mut env = Env { cfg, objects: HashMap::new(), failed: BTreeSet::new(), ring: None };
    let mut records = Vec::new();
    for st in &session.statements {
        let mut labels = Labels::default();
        let command = st.stmt.to_string();
        let result = if st.stmt.is_declaration() {
            env.declare(&st.stmt).map(|_| None)
        } else {
            env.command(&st.stmt, &mut labels).map(Some)
        };
        let record = match result {
            Ok(None) => continue,
            Ok(Some(o)) => OutputRecord {
                command,
                status: o.status,
                exactness: labels.render(),
                payload: o.payload,
                witnesses: o.witnesses,
                seed: cfg.seed,
                lines: o.lines,
            },
            Err(ExecError(msg)) => {
                if let Some(name) = declared_name(&st.stmt) {
                    env.failed.insert(name.to_string());
                }
                OutputRecord {
                    command,
                    status: Status::Error,
                    exactness: "none".to_string(),
                    payload: json!({ "error": msg }),
                    witnesses: None,
                    seed: cfg.seed,
                    lines: vec![format!("error: {msg}")],
                }
            }
        };
        let stop = cfg.fail_fast && record.status != Status::Ok;
        records.push(record);
        if stop {
            break;
        }
    }
    records
}

fn declared_name(stmt: &Stmt) -> Option<&str> {
    match stmt {
        Stmt::Ring { name, .. }
        | Stmt::Ideal { name, .. }
        | Stmt::Frac { name, .. }
        | Stmt::Closure { name, .. }
        | Stmt::Witnesses { name, .. } => Some(name),
        _ => None,
    }
}

fn poly_strings(ring: &PresentedRing, gens: &[Polynomial]) -> Vec<String> {
    gens.iter().map(|g| g.display(ring.names()).to_string()).collect()
}

fn ideal_json(i: &Ideal) -> Value {
    if i.is_unit() {
        json!(["1"])
    } else {
        json!(poly_strings(i.ring(), i.generators()))
    }
}

fn membership_json(m: Membership) -> Value {
    match m {
        Membership::Yes => json!(true),
        Membership::No => json!(false),
        Membership::Unknown => json!("unknown"),
    }
}

impl Env<'_> {
    fn ring(&self) -> EResult<Arc<PresentedRing>> {
        match &self.ring {
            Some(r) => Ok(r.clone()),
            None => fail("no ring is available"),
        }
    }

    fn object(&self, name: &str) -> EResult<&Object> {
        match self.objects.get(name) {
            Some(o) => Ok(o),
            None if self.failed.contains(name) => {
                fail(format!("'{name}' is unavailable because its declaration failed"))
            }
            None => fail(format!("undefined name '{name}'")),
        }
    }

    fn declare(&mut self, stmt: &Stmt) -> EResult<()> {
        let mut labels = Labels::default();
        let (name, obj) = match stmt {
            Stmt::Ring { name, field, vars, relations, decomposition } => {
                let field = match field {
                    FieldSpec::Rationals => Field::Rational,
                    FieldSpec::Prime(p) => Field::prime(*p)?,
                };
                let ctx =
                    PresentedRing::polynomial_ring(field, &vars.iter().map(String::as_str).collect::<Vec<_>>())?.ctx();
                let parse = |list: &[String]| -> EResult<Vec<Polynomial>> {
                    list.iter().map(|t| Ok(parse_polynomial(t, vars, ctx)?)).collect()
                };
                let rels = parse(relations)?;
                let ring = match decomposition {
                    None => PresentedRing::new(field, vars.clone(), rels)?,
                    Some(comps) => {
                        let lifted = comps
                            .iter()
                            .map(|(PolyList(q), PolyList(p))| Ok((parse(q)?, parse(p)?)))
                            .collect::<EResult<Vec<_>>>()?;
                        PresentedRing::with_relation_decomposition(field, vars.clone(), rels, lifted)?
                    }
                };
                self.ring = Some(ring.clone());
                (name, Object::Ring(ring))
            }
            Stmt::Ideal { name, expr } => (name, Object::Ideal(self.ideal(expr, &mut labels)?)),
            Stmt::Frac { name, expr } => (name, Object::Frac(self.frac(expr, &mut labels)?)),
            Stmt::Closure { name, expr } => (name, Object::Closure(self.closure(expr)?)),
            Stmt::Witnesses { name, elements } => (name, Object::Witnesses(self.witness_list(elements)?)),
            _ => unreachable!("not a declaration"),
        };
        self.objects.insert(name.clone(), obj);
        Ok(())
    }

    fn element(&self, text: &str) -> EResult<RingElement> {
        Ok(self.ring()?.parse_element(text)?)
    }

    fn fraction(&self, e: &ElementExpr) -> EResult<Fraction> {
        let num = self.element(&e.num)?;
        Ok(match &e.den {
            None => Fraction::whole(num),
            Some(d) => Fraction::new(num, self.element(d)?)?,
        })
    }

    fn witness_list(&self, elements: &[String]) -> EResult<WitnessSet> {
        let elts = elements.iter().map(|t| self.element(t)).collect::<EResult<Vec<_>>>()?;
        Ok(WitnessSet::new(elts)?)
    }

    fn ideal(&self, expr: &IdealExpr, labels: &mut Labels) -> EResult<Ideal> {
        Ok(match expr {
            IdealExpr::Literal(PolyList(gens)) => {
                let ring = self.ring()?;
                let elts = gens.iter().map(|t| self.element(t)).collect::<EResult<Vec<_>>>()?;
                Ideal::from_elements(&ring, &elts)?
            }
            IdealExpr::Name(n) => match self.object(n)? {
                Object::Ideal(i) => i.clone(),
                _ => return fail(format!("'{n}' is not an ideal")),
            },
            IdealExpr::Sum(a, b) => self.ideal(a, labels)?.sum(&self.ideal(b, labels)?)?,
            IdealExpr::Product(a, b) => self.ideal(a, labels)?.product(&self.ideal(b, labels)?)?,
            IdealExpr::Intersect(a, b) => self.ideal(a, labels)?.intersect(&self.ideal(b, labels)?)?,
            IdealExpr::ColonIdeal(a, b) => self.ideal(a, labels)?.colon_ideal(&self.ideal(b, labels)?)?,
            IdealExpr::Colon(a, f) => {
                let i = self.ideal(a, labels)?;
                let f = i.ring().parse_element(f)?;
                i.colon(&f)?
            }
            IdealExpr::Power(a, n) => self.ideal(a, labels)?.power(*n),
            IdealExpr::Apply(c, a) => {
                let c = self.closure(c)?;
                let i = self.ideal(a, labels)?;
                labels.add(c.exactness_for(&i));
                c.apply(&i)?
            }
            IdealExpr::Kappa(s, a) => {
                let c = kappa(&self.star(s)?);
                let i = self.ideal(a, labels)?;
                labels.add(c.exactness_for(&i));
                c.apply(&i)?
            }
        })
    }

    fn frac(&self, expr: &FracExpr, labels: &mut Labels) -> EResult<FractionalIdeal> {
        match expr {
            FracExpr::Name(n) => match self.object(n)? {
                Object::Frac(a) => Ok(a.clone()),
                _ => fail(format!("'{n}' is not a fractional ideal")),
            },
            FracExpr::Literal { num, den } => {
                let num = self.ideal(num, labels)?;
                match den {
                    None => Ok(FractionalIdeal::from_ideal(num)),
                    Some(d) => {
                        let d = num.ring().parse_element(d)?;
                        Ok(FractionalIdeal::new(num, d)?)
                    }
                }
            }
        }
    }

    fn closure(&self, expr: &ClosureExpr) -> EResult<ClosureOp> {
        let ring = self.ring()?;
        Ok(match expr {
            ClosureExpr::Identity => ClosureOp::identity(&ring),
            ClosureExpr::Radical => ClosureOp::radical(&ring),
            ClosureExpr::Integral => ClosureOp::integral_monomial(&ring)?,
            ClosureExpr::Frobenius { e_max } => ClosureOp::frobenius(&ring, *e_max)?,
            ClosureExpr::Finitize(c) => self.closure(c)?.finitize(),
            ClosureExpr::Standardize(c, w) => {
                let c = self.closure(c)?;
                let w = match w {
                    WitnessRef::List(list) => self.witness_list(list)?,
                    WitnessRef::Name(n) => match self.object(n)? {
                        Object::Witnesses(w) => w.clone(),
                        _ => return fail(format!("'{n}' is not a witness set")),
                    },
                };
                c.standardize_witnessed(&w)?
            }
            ClosureExpr::Kappa(s) => kappa(&self.star(s)?),
            ClosureExpr::Name(n) => match self.object(n)? {
                Object::Closure(c) => c.clone(),
                _ => return fail(format!("'{n}' is not a closure")),
            },
        })
    }

    fn star(&self, expr: &StarExpr) -> EResult<SemistarOp> {
        let ring = self.ring()?;
        Ok(match expr {
            StarExpr::B => b_operation(&ring)?,
            StarExpr::Trivial => SemistarOp::trivial(&ring),
            StarExpr::SigmaF(c) => sigma_f(&self.closure(c)?),
        })
    }

    fn pool(&self, ring: &Arc<PresentedRing>) -> EResult<Option<WitnessSet>> {
        if self.cfg.witnesses.is_empty() {
            return Ok(None);
        }
        let mut elts = WitnessSet::default_pool(ring).elements().to_vec();
        for t in &self.cfg.witnesses {
            let w = ring.parse_element(t)?;
            if !w.is_regular() {
                return fail(format!("witness {w} is not regular"));
            }
            elts.push(w);
        }
        Ok(Some(WitnessSet::new(elts)?))
    }

    fn command(&self, stmt: &Stmt, labels: &mut Labels) -> EResult<Outcome> {
        match stmt {
            Stmt::Print(q) => self.print(q, labels),
            Stmt::CheckAxioms { closure, samples } => self.check_axioms(closure, *samples),
            Stmt::CheckCorrespondence { closure, samples } => self.check_correspondence(closure, *samples, labels),
            Stmt::Decompose(i) => self.decompose(i, labels),
            Stmt::StandardizedRadical { ideal, decomposition } => self.stdrad(ideal, decomposition.as_ref(), labels),
            _ => unreachable!("declarations are handled separately"),
        }
    }

    fn print(&self, q: &Query, labels: &mut Labels) -> EResult<Outcome> {
        match q {
            Query::Ideal(e) => {
                let i = self.ideal(e, labels)?;
                Ok(Outcome::ok(json!({ "kind": "ideal", "generators": ideal_json(&i) }), vec![i.to_string()]))
            }
            Query::Object(n) => Ok(match self.object(n)? {
                Object::Ring(r) => Outcome::ok(json!({ "kind": "ring", "ring": r.to_string() }), vec![r.to_string()]),
                Object::Ideal(i) => {
                    Outcome::ok(json!({ "kind": "ideal", "generators": ideal_json(i) }), vec![i.to_string()])
                }
                Object::Frac(a) => Outcome::ok(
                    json!({
                        "kind": "fractional_ideal",
                        "numerator": ideal_json(a.numerator()),
                        "denominator": a.denominator().to_string(),
                    }),
                    vec![a.to_string()],
                ),
                Object::Closure(c) => {
                    let claims = c.claims();
                    Outcome::ok(
                        json!({
                            "kind": "closure",
                            "name": c.name(),
                            "claims": {
                                "idempotent": claims.idempotent,
                                "finite_type": claims.finite_type,
                                "weakly_prime": claims.weakly_prime,
                                "standard": claims.standard,
                            },
                            "semi_decision": c.is_semi_decision(),
                        }),
                        vec![c.name().to_string()],
                    )
                }
                Object::Witnesses(w) => {
                    let elts: Vec<String> = w.elements().iter().map(|e| e.to_string()).collect();
                    Outcome::ok(
                        json!({ "kind": "witnesses", "elements": elts }),
                        vec![format!("[{}]", elts.join(", "))],
                    )
                }
            }),
            Query::IsRegular(t) => {
                let f = self.element(t)?;
                let r = f.is_regular();
                Ok(Outcome::ok(json!({ "kind": "membership", "value": r }), vec![r.to_string()]))
            }
            Query::Member { op, element, target } => {
                let f = self.fraction(element)?;
                let m = match (op, target, &element.den) {
                    (MemberOp::Closure(c), MemberTarget::Ideal(i), None) => {
                        let c = self.closure(c)?;
                        let i = self.ideal(i, labels)?;
                        labels.add(c.exactness_for(&i));
                        c.member(f.numerator(), &i)?
                    }
                    _ => {
                        let a = match target {
                            MemberTarget::Ideal(i) => FractionalIdeal::from_ideal(self.ideal(i, labels)?),
                            MemberTarget::Frac(a) => self.frac(a, labels)?,
                        };
                        match op {
                            MemberOp::Closure(c) => {
                                let c = self.closure(c)?;
                                labels.add(c.exactness_for(&a.numerator().scale(f.denominator())?));
                                pi_member(&c, &f, &a)?
                            }
                            MemberOp::Star(s) => {
                                let s = self.star(s)?;
                                if let Some(c) = s.underlying_closure() {
                                    labels.add(c.exactness_for(&a.numerator().scale(f.denominator())?));
                                }
                                s.member(&f, &a)?
                            }
                        }
                    }
                };
                if m == Membership::Unknown {
                    labels.note("bounded search exhausted");
                }
                Ok(Outcome::ok(json!({ "kind": "membership", "value": membership_json(m) }), vec![m.to_string()]))
            }
            Query::StandardizedRadical { ideal, decomposition } => self.stdrad(ideal, decomposition.as_ref(), labels),
        }
    }

    fn supplied_decomposition(
        &self,
        i: &Ideal,
        d: &DecompositionExpr,
        labels: &mut Labels,
    ) -> EResult<PrimaryDecomposition> {
        let comps =
            d.0.iter()
                .map(|(q, p)| Ok((self.ideal(q, labels)?, self.ideal(p, labels)?)))
                .collect::<EResult<Vec<_>>>()?;
        Ok(verify_decomposition(i, comps)?)
    }

    fn stdrad(&self, ideal: &IdealExpr, d: Option<&DecompositionExpr>, labels: &mut Labels) -> EResult<Outcome> {
        let i = self.ideal(ideal, labels)?;
        let supplied = d.map(|d| self.supplied_decomposition(&i, d, labels)).transpose()?;
        let s = standardized_radical(&i, supplied)?;
        if s.has_assumed_components() {
            labels.note("assumed primary components");
        }
        let mut lines = vec![s.ideal.to_string()];
        let mut comps = Vec::new();
        for (c, cl) in s.decomposition.components().iter().zip(&s.classifications) {
            lines.push(format!("  component {}: {} with prime {}: {cl}", cl.index, c.primary, c.prime));
            let mut entry = json!({
                "primary": ideal_json(&c.primary),
                "prime": ideal_json(&c.prime),
                "status": {
                    "contained": c.status.contained.to_string(),
                    "radical": c.status.radical.to_string(),
                    "prime": c.status.prime.to_string(),
                    "primary": c.status.primary.to_string(),
                },
            });
            match &cl.verdict {
                ComponentVerdict::AllZeroDivisors { prime } => {
                    entry["classification"] = json!("all-zero-divisors");
                    entry["cited_prime"] = ideal_json(prime);
                }
                ComponentVerdict::ContainsRegular { witness } => {
                    entry["classification"] = json!("contains-regular");
                    entry["witness"] = witness.as_ref().map_or(Value::Null, |w| json!(w.to_string()));
                }
            }
            comps.push(entry);
        }
        let primes: Vec<Value> = s.relation_primes.iter().map(ideal_json).collect();
        lines.push(format!(
            "  associated primes of the relations: {}",
            s.relation_primes.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
        ));
        Ok(Outcome::ok(
            json!({
                "kind": "standardized_radical",
                "generators": ideal_json(&s.ideal),
                "components": comps,
                "relation_primes": primes,
            }),
            lines,
        ))
    }

    fn decompose(&self, e: &IdealExpr, labels: &mut Labels) -> EResult<Outcome> {
        let i = self.ideal(e, labels)?;
        let Some(m) = i.lift_monomial() else {
            return fail(format!(
                "primary decomposition is computed for monomial ideals only; supply one with \
                 `standardized_radical(...) with decomposition [...]` for {i}"
            ));
        };
        let d = monomial_primary_decomposition(i.ring(), &m)?;
        let ass = associated_primes(&d)?;
        let mut lines = Vec::new();
        let mut comps = Vec::new();
        for (k, c) in d.components().iter().enumerate() {
            lines.push(format!("  component {}: {} with prime {}", k + 1, c.primary, c.prime));
            comps.push(json!({ "primary": ideal_json(&c.primary), "prime": ideal_json(&c.prime) }));
        }
        let ass_text: Vec<String> = ass.iter().map(|p| p.to_string()).collect();
        lines.insert(0, format!("{i} = {}", comps_text(&d)));
        lines.push(format!("  associated primes: {}", ass_text.join(", ")));
        Ok(Outcome::ok(
            json!({
                "kind": "primary_decomposition",
                "ideal": ideal_json(&i),
                "components": comps,
                "associated_primes": ass.iter().map(ideal_json).collect::<Vec<_>>(),
            }),
            lines,
        ))
    }

    fn check_axioms(&self, c: &ClosureExpr, samples: Option<usize>) -> EResult<Outcome> {
        let c = self.closure(c)?;
        let mut cfg = AxiomConfig { seed: self.cfg.seed, witnesses: self.pool(c.ring())?, ..AxiomConfig::default() };
        if let Some(n) = samples {
            cfg.samples = n;
        }
        if let Some(d) = self.cfg.degree_bound {
            cfg.element_degree = d;
        }
        let report = check_axioms(&c, &cfg)?;
        let mut lines = vec![format!("  witness pool: [{}]", report.witnesses.join(", "))];
        let mut verdicts = Vec::new();
        let mut failures = Vec::new();
        for (axiom, v) in &report.verdicts {
            lines.push(format!("  {axiom}: {v}"));
            let entry = match v {
                Verdict::Passed { samples } => {
                    json!({ "axiom": axiom.name(), "verdict": "passed", "samples": samples })
                }
                Verdict::NotRefuted { samples, reason } => json!({
                    "axiom": axiom.name(), "verdict": "not-refuted", "samples": samples, "reason": reason,
                }),
                Verdict::Failed(w) => {
                    let mut wj = json!({ "I": ideal_json(&w.ideal) });
                    if let Some(j) = &w.smaller {
                        wj["J"] = ideal_json(j);
                    }
                    if let Some(e) = &w.element {
                        wj["w"] = json!(e.to_string());
                    }
                    if let Some(f) = &w.separating {
                        wj["f"] = json!(f.to_string());
                    }
                    failures.push(json!({ "axiom": axiom.name(), "witness": wj.clone() }));
                    json!({ "axiom": axiom.name(), "verdict": "failed", "witness": wj, "text": w.to_string() })
                }
            };
            verdicts.push(entry);
        }
        Ok(Outcome {
            status: if report.any_failed() { Status::Failed } else { Status::Ok },
            payload: json!({
                "kind": "axiom_report",
                "operation": report.operation,
                "samples": report.samples,
                "witness_pool": report.witnesses,
                "verdicts": verdicts,
            }),
            witnesses: (!failures.is_empty()).then(|| json!(failures)),
            lines,
        })
    }

    fn check_correspondence(&self, c: &ClosureExpr, samples: Option<usize>, labels: &mut Labels) -> EResult<Outcome> {
        let c = self.closure(c)?;
        let mut cfg = CorrespondenceConfig { seed: self.cfg.seed, ..CorrespondenceConfig::default() };
        if let Some(n) = samples {
            cfg.samples = n;
        }
        if let Some(d) = self.cfg.degree_bound {
            cfg.fraction_degree = d;
        }
        if c.is_semi_decision() {
            labels.note("membership is a semi-decision");
        }
        let report = check_correspondence(&c, &cfg)?;
        let parts = [
            ("ideal_round_trip", &report.ideal_round_trip),
            ("fraction_round_trip", &report.fraction_round_trip),
            ("order", &report.order),
        ];
        let mut lines = Vec::new();
        let mut payload = json!({
            "kind": "correspondence_report",
            "operation": report.operation,
            "order_chain": report.order_chain,
        });
        let mut failures = Vec::new();
        for (key, outcome) in parts {
            lines.push(format!("  {}: {outcome}", key.replace('_', " ")));
            payload[key] = match outcome {
                CheckOutcome::Passed { checks } => json!({ "verdict": "passed", "checks": checks }),
                CheckOutcome::Failed { checks, witness } => {
                    failures.push(json!({ "check": key, "witness": witness }));
                    json!({ "verdict": "failed", "checks": checks, "witness": witness })
                }
            };
        }
        lines.push(format!("  order chain: {}", report.order_chain.join(" <= ")));
        Ok(Outcome {
            status: if report.all_passed() { Status::Ok } else { Status::Failed },
            payload,
            witnesses: (!failures.is_empty()).then(|| json!(failures)),
            lines,
        })
    }
}

fn comps_text(d: &PrimaryDecomposition) -> String {
    d.components().iter().map(|c| c.primary.to_string()).collect::<Vec<_>>().join(" ∩ ")
}
