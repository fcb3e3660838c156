//! The session language.
//!
//! ```text
//! ring R = QQ[x,y,z] / (x^2, x*y);
//! ideal I = (x, y*z);
//! frac A = (x^2, y^2) / y;
//! closure c = standardize(radical; witnesses=[z]);
//! witnesses W = [z];
//! print standardized_radical(I);
//! print member(b, x, A);
//! check axioms(radical);
//! check correspondence(integral);
//! decompose(I);
//! ```
//!
//! Polynomials are validated while parsing, against the variables and the
//! field of the most recent `ring` declaration.

use std::collections::HashMap;
use std::fmt;

use semistar_core::poly::{parse_polynomial, MonomialOrder, PolyContext};
use semistar_core::{Field, PolyError};

/// A parse error with its position and the tokens that would have been
/// accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for Diagnostic {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Generators of an ideal as polynomial text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyList(pub Vec<String>);

impl fmt::Display for PolyList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealExpr {
    Literal(PolyList),
    Name(String),
    Sum(Box<IdealExpr>, Box<IdealExpr>),
    Product(Box<IdealExpr>, Box<IdealExpr>),
    Intersect(Box<IdealExpr>, Box<IdealExpr>),
    Colon(Box<IdealExpr>, String),
    ColonIdeal(Box<IdealExpr>, Box<IdealExpr>),
    Power(Box<IdealExpr>, u32),
    Apply(ClosureExpr, Box<IdealExpr>),
    Kappa(StarExpr, Box<IdealExpr>),
}

impl fmt::Display for IdealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealExpr::Literal(l) => write!(f, "{l}"),
            IdealExpr::Name(n) => write!(f, "{n}"),
            IdealExpr::Sum(a, b) => write!(f, "sum({a}, {b})"),
            IdealExpr::Product(a, b) => write!(f, "product({a}, {b})"),
            IdealExpr::Intersect(a, b) => write!(f, "intersect({a}, {b})"),
            IdealExpr::Colon(a, g) => write!(f, "colon({a}, {g})"),
            IdealExpr::ColonIdeal(a, b) => write!(f, "colon_ideal({a}, {b})"),
            IdealExpr::Power(a, n) => write!(f, "power({a}, {n})"),
            IdealExpr::Apply(c, a) => write!(f, "apply({c}, {a})"),
            IdealExpr::Kappa(s, a) => write!(f, "kappa({s}, {a})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessRef {
    List(Vec<String>),
    Name(String),
}

impl fmt::Display for WitnessRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessRef::List(l) => write!(f, "[{}]", l.join(", ")),
            WitnessRef::Name(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureExpr {
    Identity,
    Radical,
    Integral,
    Frobenius { e_max: u32 },
    Finitize(Box<ClosureExpr>),
    Standardize(Box<ClosureExpr>, WitnessRef),
    Kappa(Box<StarExpr>),
    Name(String),
}

impl fmt::Display for ClosureExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureExpr::Identity => write!(f, "identity"),
            ClosureExpr::Radical => write!(f, "radical"),
            ClosureExpr::Integral => write!(f, "integral"),
            ClosureExpr::Frobenius { e_max } => write!(f, "frobenius(e_max={e_max})"),
            ClosureExpr::Finitize(c) => write!(f, "finitize({c})"),
            ClosureExpr::Standardize(c, w) => write!(f, "standardize({c}; witnesses={w})"),
            ClosureExpr::Kappa(s) => write!(f, "kappa({s})"),
            ClosureExpr::Name(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarExpr {
    B,
    Trivial,
    SigmaF(ClosureExpr),
}

impl fmt::Display for StarExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarExpr::B => write!(f, "b"),
            StarExpr::Trivial => write!(f, "trivial"),
            StarExpr::SigmaF(c) => write!(f, "sigma_f({c})"),
        }
    }
}

/// A fractional ideal `(N) / d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FracExpr {
    Name(String),
    Literal { num: IdealExpr, den: Option<String> },
}

impl fmt::Display for FracExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FracExpr::Name(n) => write!(f, "{n}"),
            FracExpr::Literal { num, den: None } => write!(f, "{num}"),
            FracExpr::Literal { num, den: Some(d) } => write!(f, "{num} / {}", wrap(d)),
        }
    }
}

/// An element `r` or fraction `r / z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementExpr {
    pub num: String,
    pub den: Option<String>,
}

impl fmt::Display for ElementExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.den {
            None => write!(f, "{}", self.num),
            Some(d) => write!(f, "{} / {}", wrap(&self.num), wrap(d)),
        }
    }
}

fn wrap(text: &str) -> String {
    if text.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '^' || c == '*') || fully_parenthesized(text)
    {
        text.to_string()
    } else {
        format!("({text})")
    }
}

/// Drops parentheses that enclose the whole text.
fn strip_outer(mut text: &str) -> &str {
    while fully_parenthesized(text) {
        text = text[1..text.len() - 1].trim();
    }
    text
}

fn fully_parenthesized(text: &str) -> bool {
    if !text.starts_with('(') {
        return false;
    }
    let mut depth = 0i32;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return i + 1 == text.len();
                }
            }
            _ => {}
        }
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MemberOp {
    Closure(ClosureExpr),
    Star(StarExpr),
}

impl fmt::Display for MemberOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MemberOp::Closure(c) => write!(f, "{c}"),
            MemberOp::Star(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MemberTarget {
    Ideal(IdealExpr),
    Frac(FracExpr),
}

impl fmt::Display for MemberTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MemberTarget::Ideal(i) => write!(f, "{i}"),
            MemberTarget::Frac(a) => write!(f, "{a}"),
        }
    }
}

/// `[(q1, p1), (q2, p2)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionExpr(pub Vec<(IdealExpr, IdealExpr)>);

impl fmt::Display for DecompositionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(q, p)| format!("({q}, {p})")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Query {
    Ideal(IdealExpr),
    /// A declared fractional ideal, closure or witness set.
    Object(String),
    Member {
        op: MemberOp,
        element: ElementExpr,
        target: MemberTarget,
    },
    IsRegular(String),
    StandardizedRadical {
        ideal: IdealExpr,
        decomposition: Option<DecompositionExpr>,
    },
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Query::Ideal(i) => write!(f, "{i}"),
            Query::Object(n) => write!(f, "{n}"),
            Query::Member { op, element, target } => write!(f, "member({op}, {element}, {target})"),
            Query::IsRegular(e) => write!(f, "is_regular({e})"),
            Query::StandardizedRadical { ideal, decomposition } => {
                write!(f, "standardized_radical({ideal})")?;
                if let Some(d) = decomposition {
                    write!(f, " with decomposition {d}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Ring {
        name: String,
        field: FieldSpec,
        vars: Vec<String>,
        relations: Vec<String>,
        decomposition: Option<Vec<(PolyList, PolyList)>>,
    },
    Ideal {
        name: String,
        expr: IdealExpr,
    },
    Frac {
        name: String,
        expr: FracExpr,
    },
    Closure {
        name: String,
        expr: ClosureExpr,
    },
    Witnesses {
        name: String,
        elements: Vec<String>,
    },
    Print(Query),
    CheckAxioms {
        closure: ClosureExpr,
        samples: Option<usize>,
    },
    CheckCorrespondence {
        closure: ClosureExpr,
        samples: Option<usize>,
    },
    Decompose(IdealExpr),
    StandardizedRadical {
        ideal: IdealExpr,
        decomposition: Option<DecompositionExpr>,
    },
}

impl Stmt {
    pub fn is_declaration(&self) -> bool {
        matches!(
            self,
            Stmt::Ring { .. } | Stmt::Ideal { .. } | Stmt::Frac { .. } | Stmt::Closure { .. } | Stmt::Witnesses { .. }
        )
    }
}

fn samples_suffix(samples: &Option<usize>) -> String {
    samples.map(|n| format!(", samples={n}")).unwrap_or_default()
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Ring { name, field, vars, relations, decomposition } => {
                write!(f, "ring {name} = {field}[{}]", vars.join(","))?;
                if !relations.is_empty() {
                    write!(f, " / ({})", relations.join(", "))?;
                }
                if let Some(d) = decomposition {
                    let parts: Vec<String> = d.iter().map(|(q, p)| format!("({q}, {p})")).collect();
                    write!(f, " with decomposition [{}]", parts.join(", "))?;
                }
                write!(f, ";")
            }
            Stmt::Ideal { name, expr } => write!(f, "ideal {name} = {expr};"),
            Stmt::Frac { name, expr } => write!(f, "frac {name} = {expr};"),
            Stmt::Closure { name, expr } => write!(f, "closure {name} = {expr};"),
            Stmt::Witnesses { name, elements } => write!(f, "witnesses {name} = [{}];", elements.join(", ")),
            Stmt::Print(q) => write!(f, "print {q};"),
            Stmt::CheckAxioms { closure, samples } => {
                write!(f, "check axioms({closure}{});", samples_suffix(samples))
            }
            Stmt::CheckCorrespondence { closure, samples } => {
                write!(f, "check correspondence({closure}{});", samples_suffix(samples))
            }
            Stmt::Decompose(i) => write!(f, "decompose({i});"),
            Stmt::StandardizedRadical { ideal, decomposition } => {
                write!(f, "standardized_radical({ideal})")?;
                if let Some(d) = decomposition {
                    write!(f, " with decomposition {d}")?;
                }
                write!(f, ";")
            }
        }
    }
}

/// One statement with the position of its first character.
#[derive(Clone, Debug)]
pub struct Statement {
    pub line: usize,
    pub column: usize,
    pub stmt: Stmt,
}

impl PartialEq for Statement {
    fn eq(&self, other: &Self) -> bool {
        self.stmt == other.stmt
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Session {
    pub statements: Vec<Statement>,
}

impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{}", s.stmt)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SymKind {
    Ring,
    Ideal,
    Frac,
    Closure,
    Witnesses,
}

impl SymKind {
    fn noun(&self) -> &'static str {
        match self {
            SymKind::Ring => "a ring",
            SymKind::Ideal => "an ideal",
            SymKind::Frac => "a fractional ideal",
            SymKind::Closure => "a closure",
            SymKind::Witnesses => "a witness set",
        }
    }
}

const STATEMENT_KEYWORDS: [&str; 9] =
    ["ring", "ideal", "frac", "closure", "witnesses", "print", "check", "decompose", "standardized_radical"];
const IDEAL_FORMS: [&str; 10] =
    ["'('", "ideal name", "sum", "product", "intersect", "colon", "colon_ideal", "power", "apply", "kappa"];
const CLOSURE_FORMS: [&str; 8] =
    ["identity", "radical", "integral", "frobenius", "finitize", "standardize", "kappa", "closure name"];
const RESERVED: [&str; 16] = [
    "ring",
    "ideal",
    "frac",
    "closure",
    "witnesses",
    "print",
    "check",
    "decompose",
    "standardized_radical",
    "identity",
    "radical",
    "integral",
    "frobenius",
    "b",
    "trivial",
    "with",
];

/// Parses a session. Names must be declared before use and only once.
pub fn parse_session(text: &str) -> Result<Session, Diagnostic> {
    let mut p = Parser { src: text, pos: 0, symbols: HashMap::new(), ring: None };
    let mut statements = Vec::new();
    loop {
        p.skip_trivia();
        if p.pos >= p.src.len() {
            return Ok(Session { statements });
        }
        let (line, column) = p.line_col(p.pos);
        let stmt = p.statement()?;
        statements.push(Statement { line, column, stmt });
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    symbols: HashMap<String, SymKind>,
    ring: Option<(Vec<String>, Field)>,
}

type PResult<T> = Result<T, Diagnostic>;

impl Parser<'_> {
    fn line_col(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, col)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>, expected: &[&str]) -> Diagnostic {
        let (line, column) = self.line_col(pos);
        Diagnostic { line, column, message: message.into(), expected: expected.iter().map(|s| s.to_string()).collect() }
    }

    fn skip_trivia(&mut self) {
        loop {
            let rest = &self.src[self.pos..];
            let trimmed = rest.trim_start();
            self.pos += rest.len() - trimmed.len();
            if trimmed.starts_with('#') || trimmed.starts_with("//") {
                self.pos += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                return;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_trivia();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.describe_next();
            Err(self.error_at(self.pos, format!("unexpected {found}"), &[&format!("'{c}'")]))
        }
    }

    fn describe_next(&mut self) -> String {
        match self.peek() {
            None => "end of input".to_string(),
            Some(c) => format!("'{c}'"),
        }
    }

    fn ident(&mut self) -> Option<(String, usize)> {
        self.skip_trivia();
        let start = self.pos;
        let rest = &self.src[start..];
        let first = rest.chars().next()?;
        if !(first.is_ascii_alphabetic() || first == '_') {
            return None;
        }
        let len = rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(rest.len());
        self.pos += len;
        Some((rest[..len].to_string(), start))
    }

    fn expect_ident(&mut self, expected: &[&str]) -> PResult<(String, usize)> {
        match self.ident() {
            Some(id) => Ok(id),
            None => {
                let found = self.describe_next();
                Err(self.error_at(self.pos, format!("unexpected {found}"), expected))
            }
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> PResult<()> {
        let save = self.pos;
        match self.ident() {
            Some((id, _)) if id == kw => Ok(()),
            _ => {
                self.pos = save;
                let found = self.describe_next();
                Err(self.error_at(self.pos, format!("unexpected {found}"), &[kw]))
            }
        }
    }

    fn peek_ident(&mut self) -> Option<String> {
        let save = self.pos;
        let id = self.ident().map(|(s, _)| s);
        self.pos = save;
        id
    }

    fn integer(&mut self) -> PResult<u64> {
        self.skip_trivia();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            let found = self.describe_next();
            return Err(self.error_at(self.pos, format!("unexpected {found}"), &["integer"]));
        }
        let value = rest[..len].parse().map_err(|_| self.error_at(self.pos, "integer out of range", &[]))?;
        self.pos += len;
        Ok(value)
    }

    fn declare(&mut self, name: &str, at: usize, kind: SymKind) -> PResult<()> {
        if RESERVED.contains(&name) {
            return Err(self.error_at(at, format!("'{name}' is a reserved word"), &["name"]));
        }
        if self.symbols.contains_key(name) {
            return Err(self.error_at(at, format!("name '{name}' is already declared"), &[]));
        }
        self.symbols.insert(name.to_string(), kind);
        Ok(())
    }

    fn lookup(&self, name: &str, at: usize, kind: SymKind) -> PResult<()> {
        match self.symbols.get(name) {
            Some(k) if *k == kind => Ok(()),
            Some(k) => Err(self.error_at(at, format!("'{name}' is {}, not {}", k.noun(), kind.noun()), &[])),
            None => Err(self.error_at(at, format!("undefined name '{name}'"), &[])),
        }
    }

    fn require_ring(&self, at: usize, what: &str) -> PResult<(Vec<String>, Field)> {
        self.ring.clone().ok_or_else(|| {
            self.error_at(at, format!("undefined name: no ring is declared before this {what}"), &["ring"])
        })
    }

    fn statement(&mut self) -> PResult<Stmt> {
        let (kw, at) = self.expect_ident(&STATEMENT_KEYWORDS)?;
        let stmt = match kw.as_str() {
            "ring" => self.ring_decl()?,
            "ideal" => {
                let (name, name_at) = self.expect_ident(&["name"])?;
                self.require_ring(at, "ideal")?;
                self.expect('=')?;
                let expr = self.ideal_expr()?;
                self.declare(&name, name_at, SymKind::Ideal)?;
                Stmt::Ideal { name, expr }
            }
            "frac" => {
                let (name, name_at) = self.expect_ident(&["name"])?;
                self.require_ring(at, "fractional ideal")?;
                self.expect('=')?;
                let num = self.ideal_expr()?;
                let den = if self.eat('/') { Some(strip_outer(&self.poly_text()?).to_string()) } else { None };
                self.declare(&name, name_at, SymKind::Frac)?;
                Stmt::Frac { name, expr: FracExpr::Literal { num, den } }
            }
            "closure" => {
                let (name, name_at) = self.expect_ident(&["name"])?;
                self.require_ring(at, "closure")?;
                self.expect('=')?;
                let expr = self.closure_expr()?;
                self.declare(&name, name_at, SymKind::Closure)?;
                Stmt::Closure { name, expr }
            }
            "witnesses" => {
                let (name, name_at) = self.expect_ident(&["name"])?;
                self.require_ring(at, "witness set")?;
                self.expect('=')?;
                let elements = self.poly_bracket_list()?;
                self.declare(&name, name_at, SymKind::Witnesses)?;
                Stmt::Witnesses { name, elements }
            }
            "print" => {
                self.require_ring(at, "command")?;
                Stmt::Print(self.query()?)
            }
            "check" => {
                self.require_ring(at, "command")?;
                let (what, what_at) = self.expect_ident(&["axioms", "correspondence"])?;
                self.expect('(')?;
                let closure = self.closure_expr()?;
                let samples = self.optional_samples()?;
                self.expect(')')?;
                match what.as_str() {
                    "axioms" => Stmt::CheckAxioms { closure, samples },
                    "correspondence" => Stmt::CheckCorrespondence { closure, samples },
                    other => {
                        return Err(self.error_at(
                            what_at,
                            format!("unknown check '{other}'"),
                            &["axioms", "correspondence"],
                        ))
                    }
                }
            }
            "decompose" => {
                self.require_ring(at, "command")?;
                self.expect('(')?;
                let i = self.ideal_expr()?;
                self.expect(')')?;
                Stmt::Decompose(i)
            }
            "standardized_radical" => {
                self.require_ring(at, "command")?;
                let (ideal, decomposition) = self.stdrad_args()?;
                Stmt::StandardizedRadical { ideal, decomposition }
            }
            other => {
                return Err(self.error_at(at, format!("unknown statement '{other}'"), &STATEMENT_KEYWORDS));
            }
        };
        self.expect(';')?;
        Ok(stmt)
    }

    fn optional_samples(&mut self) -> PResult<Option<usize>> {
        if !self.eat(',') {
            return Ok(None);
        }
        self.expect_keyword("samples")?;
        self.expect('=')?;
        let at = self.pos;
        let n = self.integer()?;
        if n == 0 {
            return Err(self.error_at(at, "samples must be positive", &[]));
        }
        Ok(Some(n as usize))
    }

    fn ring_decl(&mut self) -> PResult<Stmt> {
        let (name, name_at) = self.expect_ident(&["name"])?;
        self.expect('=')?;
        let (fname, f_at) = self.expect_ident(&["QQ", "GF"])?;
        let (field, spec) = match fname.as_str() {
            "QQ" => (Field::Rational, FieldSpec::Rationals),
            "GF" => {
                self.expect('(')?;
                let at = self.pos;
                let p = self.integer()?;
                let p32 = u32::try_from(p).map_err(|_| self.error_at(at, "modulus too large", &[]))?;
                let field = Field::prime(p32).map_err(|e| self.error_at(at, e.to_string(), &[]))?;
                self.expect(')')?;
                (field, FieldSpec::Prime(p32))
            }
            other => return Err(self.error_at(f_at, format!("unknown field '{other}'"), &["QQ", "GF"])),
        };
        self.expect('[')?;
        let mut vars = Vec::new();
        loop {
            let (v, v_at) = self.expect_ident(&["variable name"])?;
            if vars.contains(&v) {
                return Err(self.error_at(v_at, format!("duplicate variable '{v}'"), &[]));
            }
            vars.push(v);
            if !self.eat(',') {
                break;
            }
        }
        self.expect(']')?;
        let previous = self.ring.replace((vars.clone(), field));
        let relations = if self.eat('/') {
            self.expect('(')?;
            let rels = self.poly_list_until(')')?;
            self.expect(')')?;
            rels
        } else {
            Vec::new()
        };
        let decomposition = if self.peek_ident().as_deref() == Some("with") {
            self.ident();
            self.expect_keyword("decomposition")?;
            self.expect('[')?;
            let mut comps = Vec::new();
            loop {
                self.expect('(')?;
                self.expect('(')?;
                let q = self.poly_list_until(')')?;
                self.expect(')')?;
                self.expect(',')?;
                self.expect('(')?;
                let p = self.poly_list_until(')')?;
                self.expect(')')?;
                self.expect(')')?;
                comps.push((PolyList(q), PolyList(p)));
                if !self.eat(',') {
                    break;
                }
            }
            self.expect(']')?;
            Some(comps)
        } else {
            None
        };
        if let Err(e) = self.declare(&name, name_at, SymKind::Ring) {
            self.ring = previous;
            return Err(e);
        }
        Ok(Stmt::Ring { name, field: spec, vars, relations, decomposition })
    }

    /// Raw text of one polynomial: up to the next `,`, `)`, `]` or `;` at
    /// parenthesis depth zero. Validated against the current ring.
    fn poly_text(&mut self) -> PResult<String> {
        self.skip_trivia();
        let start = self.pos;
        let rest = &self.src[start..];
        let mut depth = 0i32;
        let mut end = rest.len();
        for (i, c) in rest.char_indices() {
            match c {
                '(' => depth += 1,
                ')' if depth > 0 => depth -= 1,
                ',' | ')' | ']' | ';' if depth == 0 => {
                    end = i;
                    break;
                }
                _ => {}
            }
        }
        let text = rest[..end].trim_end();
        if text.is_empty() {
            let found = self.describe_next();
            return Err(self.error_at(start, format!("unexpected {found}"), &["polynomial"]));
        }
        self.pos = start + end;
        self.validate_poly(text, start)?;
        Ok(text.to_string())
    }

    fn validate_poly(&self, text: &str, start: usize) -> PResult<()> {
        let (names, field) = self.require_ring(start, "polynomial")?;
        let ctx = PolyContext::new(names.len(), field, MonomialOrder::Grevlex);
        match parse_polynomial(text, &names, ctx) {
            Ok(_) => Ok(()),
            Err(PolyError::Parse { column, message }) => {
                let offset: usize = text.chars().take(column - 1).map(char::len_utf8).sum();
                Err(self.error_at(start + offset, message, &[]))
            }
            Err(e) => Err(self.error_at(start, e.to_string(), &[])),
        }
    }

    fn poly_list_until(&mut self, close: char) -> PResult<Vec<String>> {
        let mut out = Vec::new();
        if self.peek() == Some(close) {
            return Ok(out);
        }
        loop {
            out.push(self.poly_text()?);
            if !self.eat(',') {
                return Ok(out);
            }
        }
    }

    fn poly_bracket_list(&mut self) -> PResult<Vec<String>> {
        self.expect('[')?;
        let list = self.poly_list_until(']')?;
        self.expect(']')?;
        Ok(list)
    }

    fn ideal_expr(&mut self) -> PResult<IdealExpr> {
        if self.eat('(') {
            let gens = self.poly_list_until(')')?;
            self.expect(')')?;
            return Ok(IdealExpr::Literal(PolyList(gens)));
        }
        let Some((id, at)) = self.ident() else {
            let found = self.describe_next();
            return Err(self.error_at(self.pos, format!("unexpected {found}"), &IDEAL_FORMS));
        };
        let binary = |p: &mut Self| -> PResult<(IdealExpr, IdealExpr)> {
            p.expect('(')?;
            let a = p.ideal_expr()?;
            p.expect(',')?;
            let b = p.ideal_expr()?;
            p.expect(')')?;
            Ok((a, b))
        };
        Ok(match id.as_str() {
            "sum" if self.peek() == Some('(') => {
                let (a, b) = binary(self)?;
                IdealExpr::Sum(Box::new(a), Box::new(b))
            }
            "product" if self.peek() == Some('(') => {
                let (a, b) = binary(self)?;
                IdealExpr::Product(Box::new(a), Box::new(b))
            }
            "intersect" if self.peek() == Some('(') => {
                let (a, b) = binary(self)?;
                IdealExpr::Intersect(Box::new(a), Box::new(b))
            }
            "colon_ideal" if self.peek() == Some('(') => {
                let (a, b) = binary(self)?;
                IdealExpr::ColonIdeal(Box::new(a), Box::new(b))
            }
            "colon" if self.peek() == Some('(') => {
                self.expect('(')?;
                let a = self.ideal_expr()?;
                self.expect(',')?;
                let f = self.poly_text()?;
                self.expect(')')?;
                IdealExpr::Colon(Box::new(a), f)
            }
            "power" if self.peek() == Some('(') => {
                self.expect('(')?;
                let a = self.ideal_expr()?;
                self.expect(',')?;
                let at = self.pos;
                let n = self.integer()?;
                let n = u32::try_from(n).map_err(|_| self.error_at(at, "exponent too large", &[]))?;
                self.expect(')')?;
                IdealExpr::Power(Box::new(a), n)
            }
            "apply" if self.peek() == Some('(') => {
                self.expect('(')?;
                let c = self.closure_expr()?;
                self.expect(',')?;
                let a = self.ideal_expr()?;
                self.expect(')')?;
                IdealExpr::Apply(c, Box::new(a))
            }
            "kappa" if self.peek() == Some('(') => {
                self.expect('(')?;
                let s = self.star_expr()?;
                self.expect(',')?;
                let a = self.ideal_expr()?;
                self.expect(')')?;
                IdealExpr::Kappa(s, Box::new(a))
            }
            _ => {
                self.lookup(&id, at, SymKind::Ideal)?;
                IdealExpr::Name(id)
            }
        })
    }

    fn closure_expr(&mut self) -> PResult<ClosureExpr> {
        let Some((id, at)) = self.ident() else {
            let found = self.describe_next();
            return Err(self.error_at(self.pos, format!("unexpected {found}"), &CLOSURE_FORMS));
        };
        Ok(match id.as_str() {
            "identity" => ClosureExpr::Identity,
            "radical" => ClosureExpr::Radical,
            "integral" => ClosureExpr::Integral,
            "frobenius" => {
                let mut e_max = 1;
                if self.eat('(') {
                    self.expect_keyword("e_max")?;
                    self.expect('=')?;
                    let at = self.pos;
                    let e = self.integer()?;
                    e_max = u32::try_from(e).map_err(|_| self.error_at(at, "e_max too large", &[]))?;
                    self.expect(')')?;
                }
                ClosureExpr::Frobenius { e_max }
            }
            "finitize" => {
                self.expect('(')?;
                let c = self.closure_expr()?;
                self.expect(')')?;
                ClosureExpr::Finitize(Box::new(c))
            }
            "standardize" => {
                self.expect('(')?;
                let c = self.closure_expr()?;
                self.expect(';')?;
                self.expect_keyword("witnesses")?;
                self.expect('=')?;
                let w = if self.peek() == Some('[') {
                    WitnessRef::List(self.poly_bracket_list()?)
                } else {
                    let (name, at) = self.expect_ident(&["'['", "witness set name"])?;
                    self.lookup(&name, at, SymKind::Witnesses)?;
                    WitnessRef::Name(name)
                };
                self.expect(')')?;
                ClosureExpr::Standardize(Box::new(c), w)
            }
            "kappa" => {
                self.expect('(')?;
                let s = self.star_expr()?;
                self.expect(')')?;
                ClosureExpr::Kappa(Box::new(s))
            }
            _ => {
                self.lookup(&id, at, SymKind::Closure)?;
                ClosureExpr::Name(id)
            }
        })
    }

    fn star_expr(&mut self) -> PResult<StarExpr> {
        let (id, at) = self.expect_ident(&["b", "trivial", "sigma_f"])?;
        match id.as_str() {
            "b" => Ok(StarExpr::B),
            "trivial" => Ok(StarExpr::Trivial),
            "sigma_f" => {
                self.expect('(')?;
                let c = self.closure_expr()?;
                self.expect(')')?;
                Ok(StarExpr::SigmaF(c))
            }
            other => {
                Err(self.error_at(at, format!("unknown semistar operation '{other}'"), &["b", "trivial", "sigma_f"]))
            }
        }
    }

    fn stdrad_args(&mut self) -> PResult<(IdealExpr, Option<DecompositionExpr>)> {
        self.expect('(')?;
        let ideal = self.ideal_expr()?;
        self.expect(')')?;
        let decomposition = if self.peek_ident().as_deref() == Some("with") {
            self.ident();
            self.expect_keyword("decomposition")?;
            self.expect('[')?;
            let mut comps = Vec::new();
            loop {
                self.expect('(')?;
                let q = self.ideal_expr()?;
                self.expect(',')?;
                let p = self.ideal_expr()?;
                self.expect(')')?;
                comps.push((q, p));
                if !self.eat(',') {
                    break;
                }
            }
            self.expect(']')?;
            Some(DecompositionExpr(comps))
        } else {
            None
        };
        Ok((ideal, decomposition))
    }

    fn query(&mut self) -> PResult<Query> {
        let save = self.pos;
        match self.ident() {
            Some((id, _)) if id == "member" && self.peek() == Some('(') => {
                self.expect('(')?;
                let op = match self.peek_ident().as_deref() {
                    Some("b") | Some("trivial") | Some("sigma_f") => MemberOp::Star(self.star_expr()?),
                    _ => MemberOp::Closure(self.closure_expr()?),
                };
                self.expect(',')?;
                let element = self.element_expr()?;
                self.expect(',')?;
                let target = self.member_target()?;
                self.expect(')')?;
                Ok(Query::Member { op, element, target })
            }
            Some((id, _)) if id == "is_regular" && self.peek() == Some('(') => {
                self.expect('(')?;
                let f = self.poly_text()?;
                self.expect(')')?;
                Ok(Query::IsRegular(f))
            }
            Some((id, _)) if id == "standardized_radical" && self.peek() == Some('(') => {
                let (ideal, decomposition) = self.stdrad_args()?;
                Ok(Query::StandardizedRadical { ideal, decomposition })
            }
            Some((id, _))
                if matches!(
                    self.symbols.get(&id),
                    Some(SymKind::Frac) | Some(SymKind::Closure) | Some(SymKind::Witnesses) | Some(SymKind::Ring)
                ) =>
            {
                Ok(Query::Object(id))
            }
            _ => {
                self.pos = save;
                Ok(Query::Ideal(self.ideal_expr()?))
            }
        }
    }

    fn member_target(&mut self) -> PResult<MemberTarget> {
        if let Some(id) = self.peek_ident() {
            if self.symbols.get(&id) == Some(&SymKind::Frac) {
                self.ident();
                return Ok(MemberTarget::Frac(FracExpr::Name(id)));
            }
        }
        let num = self.ideal_expr()?;
        if self.eat('/') {
            let den = strip_outer(&self.poly_text()?).to_string();
            return Ok(MemberTarget::Frac(FracExpr::Literal { num, den: Some(den) }));
        }
        Ok(MemberTarget::Ideal(num))
    }

    /// `r` or `r / z`. A `/` between two integer literals is a rational
    /// coefficient, any other top-level `/` separates numerator and
    /// denominator.
    fn element_expr(&mut self) -> PResult<ElementExpr> {
        self.skip_trivia();
        let start = self.pos;
        let rest = &self.src[start..];
        let mut depth = 0i32;
        let mut end = rest.len();
        let mut split = None;
        let chars: Vec<(usize, char)> = rest.char_indices().collect();
        for (k, &(i, c)) in chars.iter().enumerate() {
            match c {
                '(' => depth += 1,
                ')' if depth > 0 => depth -= 1,
                ',' | ')' | ']' | ';' if depth == 0 => {
                    end = i;
                    break;
                }
                '/' if depth == 0 && split.is_none() => {
                    let before = chars[..k].iter().rev().find(|(_, c)| !c.is_whitespace()).map(|&(_, c)| c);
                    let after = chars[k + 1..].iter().find(|(_, c)| !c.is_whitespace()).map(|&(_, c)| c);
                    let coefficient = before.is_some_and(|c| c.is_ascii_digit())
                        && after.is_some_and(|c| c.is_ascii_digit())
                        && literal_before(&rest[..i]);
                    if !coefficient {
                        split = Some(i);
                    }
                }
                _ => {}
            }
        }
        let (num_end, den_start) = match split {
            Some(s) => (s, Some(s + 1)),
            None => (end, None),
        };
        let num = rest[..num_end].trim();
        if num.is_empty() {
            let found = self.describe_next();
            return Err(self.error_at(start, format!("unexpected {found}"), &["polynomial"]));
        }
        let num_start = start + (rest[..num_end].len() - rest[..num_end].trim_start().len());
        self.validate_poly(num, num_start)?;
        let den = match den_start {
            None => None,
            Some(d) => {
                let raw = &rest[d..end];
                let text = raw.trim();
                let d_start = start + d + (raw.len() - raw.trim_start().len());
                if text.is_empty() {
                    return Err(self.error_at(d_start, "missing denominator", &["polynomial"]));
                }
                self.validate_poly(text, d_start)?;
                Some(text.to_string())
            }
        };
        self.pos = start + end;
        let (num, den) = match den {
            Some(d) => (strip_outer(num).to_string(), Some(strip_outer(&d).to_string())),
            None => (num.to_string(), None),
        };
        Ok(ElementExpr { num, den })
    }
}

/// Whether `text` ends with an integer literal that is not part of a name.
fn literal_before(text: &str) -> bool {
    let trimmed = text.trim_end();
    let digits = trimmed.len() - trimmed.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let head = &trimmed[..trimmed.len() - digits];
    !head.ends_with(|c: char| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smoke() {
        let s =
            parse_session("ring R = QQ[x,y,z]/(x^2, x*y); ideal I = (x, y*z); print standardized_radical(I);").unwrap();
        assert_eq!(s.statements.len(), 3);
        assert_eq!(
            s.statements[0].stmt,
            Stmt::Ring {
                name: "R".into(),
                field: FieldSpec::Rationals,
                vars: vec!["x".into(), "y".into(), "z".into()],
                relations: vec!["x^2".into(), "x*y".into()],
                decomposition: None,
            }
        );
    }

    #[test]
    fn undefined_names() {
        let err = parse_session("ideal I = (x);").unwrap_err();
        assert_eq!((err.line, err.column), (1, 1));
        assert!(err.message.contains("undefined name"), "{err}");

        let err = parse_session("ring R = QQ[x];\nprint J;").unwrap_err();
        assert_eq!((err.line, err.column), (2, 7));
        assert_eq!(err.message, "undefined name 'J'");
    }

    #[test]
    fn positions_and_expected_tokens() {
        let err = parse_session("ring R = QQ[x,y];\nideal I = (x, w);").unwrap_err();
        assert_eq!((err.line, err.column), (2, 15));
        assert_eq!(err.message, "unknown variable 'w'");

        let err = parse_session("ring R = QQ[x];\nfoo;").unwrap_err();
        assert_eq!((err.line, err.column), (2, 1));
        assert!(err.expected.contains(&"ring".to_string()));

        let err = parse_session("ring R = QQ[x]\nideal I = (x);").unwrap_err();
        assert_eq!(err.expected, vec!["';'".to_string()]);
        assert_eq!((err.line, err.column), (2, 1));
    }

    #[test]
    fn duplicate_names_and_kinds() {
        assert!(parse_session("ring R = QQ[x]; ideal I = (x); ideal I = (x^2);").is_err());
        let err = parse_session("ring R = QQ[x]; ideal I = (x); print apply(I, I);").unwrap_err();
        assert!(err.message.contains("not a closure"), "{err}");
        assert!(parse_session("ring R = GF(100)[x];").is_err());
    }

    #[test]
    fn fractions_in_elements() {
        let s = parse_session(
            "ring R = QQ[x,y]; frac A = (x^2, y^2) / y; print member(b, x/y, A); print member(radical, 1/2*x, (x));",
        )
        .unwrap();
        match &s.statements[2].stmt {
            Stmt::Print(Query::Member { element, .. }) => {
                assert_eq!(element, &ElementExpr { num: "x".into(), den: Some("y".into()) })
            }
            other => panic!("{other:?}"),
        }
        match &s.statements[3].stmt {
            Stmt::Print(Query::Member { element, .. }) => assert_eq!(element.den, None),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn display_round_trips() {
        let text = "ring R = GF(101)[x,y,z] / (x^2, x*y);\n\
                    ideal I = (x, y*z);\n\
                    ideal K = intersect(I, (1));\n\
                    ideal L = power(colon(sum(I, (z)), z), 2);\n\
                    witnesses W = [z, z^2];\n\
                    closure c = standardize(finitize(radical); witnesses=W);\n\
                    closure d = frobenius(e_max=2);\n\
                    frac A = (x, z) / z;\n\
                    print member(c, x + y, I);\n\
                    print member(sigma_f(identity), (x + 1)/z, A);\n\
                    print kappa(trivial, I);\n\
                    print standardized_radical(I) with decomposition [((x, y), (x, y)), ((x, z), (x, z))];\n\
                    check axioms(radical, samples=10);\n\
                    check correspondence(identity);\n\
                    decompose(I);\n\
                    standardized_radical(K);\n";
        let s = parse_session(text).unwrap();
        let again = parse_session(&s.to_string()).unwrap();
        assert_eq!(s, again);
        assert_eq!(s.to_string(), again.to_string());
    }

    #[test]
    fn comments_are_skipped() {
        let s = parse_session("# a ring\nring R = QQ[x]; // trailing\nprint (x);").unwrap();
        assert_eq!(s.statements.len(), 2);
        assert_eq!((s.statements[1].line, s.statements[1].column), (3, 1));
    }
}
