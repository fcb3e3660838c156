//! The standardized radical through a primary decomposition.
//!
//! For `I = q_1 ∩ ... ∩ q_k`, a component consists of zero-divisors exactly
//! when it lies in some associated prime of `J` (prime avoidance). The
//! standardized radical is the intersection of the primes of those
//! components, or `R` when there are none.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{
    associated_primes, monomial_primary_decomposition, Component, ComponentStatus, PrimaryDecomposition, Provenance,
    Status,
};
use crate::rings::{Ideal, PresentedRing, RingElement};

/// Zero-divisor classification of one primary component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentVerdict {
    /// `q ⊆ p` for the cited associated prime `p` of `J`.
    AllZeroDivisors { prime: Ideal },
    /// `q` lies in no associated prime of `J`; a regular generator of `q`
    /// when one exists.
    ContainsRegular { witness: Option<RingElement> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentClassification {
    pub index: usize,
    pub verdict: ComponentVerdict,
}

impl fmt::Display for ComponentClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            ComponentVerdict::AllZeroDivisors { prime } => write!(f, "all-zero-divisors (inside {prime})"),
            ComponentVerdict::ContainsRegular { witness: Some(w) } => write!(f, "contains-regular (witness {w})"),
            ComponentVerdict::ContainsRegular { witness: None } => {
                write!(f, "contains-regular (outside every associated prime of the relations)")
            }
        }
    }
}

/// Associated primes of the relation ideal `J`: `(0)` when `J = 0`, from
/// the monomial decomposition when `J` is monomial, from a supplied and
/// verified decomposition otherwise.
pub fn relation_associated_primes(ring: &Arc<PresentedRing>) -> Result<Vec<Ideal>> {
    let zero = ring.zero_ideal();
    if ring.is_polynomial_ring() {
        return Ok(vec![zero]);
    }
    if let Some(m) = zero.lift_monomial() {
        return associated_primes(&monomial_primary_decomposition(ring, &m)?);
    }
    if let Some(parts) = ring.relation_decomposition() {
        let comps = parts
            .iter()
            .map(|(q, p)| Ok((Ideal::from_polys(ring, q.clone())?, Ideal::from_polys(ring, p.clone())?)))
            .collect::<Result<Vec<_>>>()?;
        return associated_primes(&verify_decomposition(&zero, comps)?);
    }
    Err(Error::Unsupported(format!(
        "associated primes of the relations of {ring} are unknown; declare the ring with a primary \
         decomposition of its relations"
    )))
}

/// Classifies `q` against the associated primes of `J`.
pub fn classify_component(q: &Ideal, ass: &[Ideal]) -> Result<ComponentVerdict> {
    for p in ass {
        if p.contains_ideal(q)? {
            return Ok(ComponentVerdict::AllZeroDivisors { prime: p.clone() });
        }
    }
    let witness = q.generator_elements().into_iter().find(RingElement::is_regular);
    Ok(ComponentVerdict::ContainsRegular { witness })
}

/// Checks a proposed decomposition of `i`: the intersection, `q ⊆ p`,
/// `p ⊆ rad(q)` on generators, and primality and primariness for monomial
/// components. Non-monomial primes and components are marked assumed.
pub fn verify_decomposition(i: &Ideal, components: Vec<(Ideal, Ideal)>) -> Result<PrimaryDecomposition> {
    let ring = i.ring();
    for (q, p) in &components {
        if !PresentedRing::same(q.ring(), ring) || !PresentedRing::same(p.ring(), ring) {
            return Err(Error::Ring(crate::RingError::RingMismatch));
        }
    }
    let intersection = components.iter().try_fold(ring.unit_ideal(), |acc, (q, _)| acc.intersect(q))?;
    if &intersection != i {
        return Err(Error::IntersectionMismatch { expected: i.to_string(), found: intersection.to_string() });
    }
    let mut out = Vec::with_capacity(components.len());
    for (k, (q, p)) in components.into_iter().enumerate() {
        let reject = |reason: String| Error::DecompositionRejected { component: k + 1, reason };
        if p.is_unit() || q.is_unit() {
            return Err(reject("components must be proper ideals".into()));
        }
        if !p.contains_ideal(&q)? {
            return Err(reject(format!("{q} is not contained in {p}")));
        }
        for g in p.generator_elements() {
            if !q.radical_contains(&g)? {
                return Err(reject(format!("{g} lies in {p} but not in the radical of {q}")));
            }
        }
        let prime = match p.lift_monomial() {
            Some(m) if m.is_prime() => Status::Verified,
            Some(_) => return Err(reject(format!("{p} is monomial but not generated by variables"))),
            None => Status::Assumed,
        };
        let primary = match q.lift_monomial() {
            Some(m) if m.is_primary() => Status::Verified,
            Some(_) => return Err(reject(format!("{q} fails the monomial primary criterion"))),
            None => Status::Assumed,
        };
        out.push(Component {
            primary: q,
            prime: p,
            status: ComponentStatus { contained: Status::Verified, radical: Status::Verified, prime, primary },
        });
    }
    Ok(PrimaryDecomposition::from_parts(i.clone(), out, Provenance::UserSupplied, true))
}

/// The standardized radical with the decomposition and classifications it
/// was computed from.
#[derive(Clone, Debug)]
pub struct StandardizedRadical {
    pub ideal: Ideal,
    pub decomposition: PrimaryDecomposition,
    pub classifications: Vec<ComponentClassification>,
    pub relation_primes: Vec<Ideal>,
}

impl StandardizedRadical {
    /// Whether some component's primality or primariness was assumed.
    pub fn has_assumed_components(&self) -> bool {
        self.decomposition.components().iter().any(|c| c.status.is_assumed())
    }
}

/// `I^{rad_s}`: the intersection of the primes of the components made of
/// zero-divisors. A supplied decomposition must be verified and belong to
/// `i`; without one, the preimage of `i` must be monomial.
pub fn standardized_radical(i: &Ideal, decomposition: Option<PrimaryDecomposition>) -> Result<StandardizedRadical> {
    let ring = i.ring().clone();
    let decomposition = match decomposition {
        Some(d) => {
            if d.ideal() != i {
                return Err(Error::Unverified(format!("the decomposition is of {}, not of {i}", d.ideal())));
            }
            let report = d.verification_report();
            if !report.is_empty() {
                return Err(Error::Unverified(report.join("; ")));
            }
            d
        }
        None => match i.lift_monomial() {
            Some(m) => monomial_primary_decomposition(&ring, &m)?,
            None => {
                return Err(Error::Unsupported(format!(
                    "no primary decomposition available for {i}; supply one with \
                     `with decomposition [(q1, p1), ...]`"
                )))
            }
        },
    };
    let relation_primes = relation_associated_primes(&ring)?;

    let mut classifications = Vec::with_capacity(decomposition.components().len());
    let mut result = ring.unit_ideal();
    for (k, c) in decomposition.components().iter().enumerate() {
        let verdict = classify_component(&c.primary, &relation_primes)?;
        if let ComponentVerdict::AllZeroDivisors { .. } = verdict {
            result = result.intersect(&c.prime)?;
        }
        classifications.push(ComponentClassification { index: k + 1, verdict });
    }
    Ok(StandardizedRadical { ideal: result, decomposition, classifications, relation_primes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn example_ring(field: Field) -> Arc<PresentedRing> {
        PresentedRing::parse(field, &["x", "y", "z"], &["x^2", "x*y"]).unwrap()
    }

    #[test]
    fn relation_primes() {
        let r = example_ring(Field::Rational);
        let primes: Vec<String> = relation_associated_primes(&r).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(primes, ["(x)", "(x, y)"]);
        let p = PresentedRing::polynomial_ring(Field::Rational, &["x"]).unwrap();
        assert!(relation_associated_primes(&p).unwrap()[0].is_zero());
        let q = PresentedRing::parse(Field::Rational, &["x", "y"], &["x^2 - y^3"]).unwrap();
        assert!(matches!(relation_associated_primes(&q), Err(Error::Unsupported(_))));
    }

    #[test]
    fn example_standardized_radical() {
        for field in [Field::Rational, Field::prime(101).unwrap()] {
            let r = example_ring(field);
            let i = r.ideal(&["x", "y*z"]).unwrap();
            let s = standardized_radical(&i, None).unwrap();
            assert_eq!(s.ideal, r.ideal(&["x", "y"]).unwrap());
            let comps: Vec<String> = s.decomposition.components().iter().map(|c| c.primary.to_string()).collect();
            assert_eq!(comps, ["(x, y)", "(x, z)"]);
            assert!(matches!(s.classifications[0].verdict, ComponentVerdict::AllZeroDivisors { .. }));
            match &s.classifications[1].verdict {
                ComponentVerdict::ContainsRegular { witness: Some(w) } => assert_eq!(w.to_string(), "z"),
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn primary_zero_divisor_ideal() {
        let r = example_ring(Field::Rational);
        let i = r.ideal(&["x", "y"]).unwrap();
        assert_eq!(standardized_radical(&i, None).unwrap().ideal, i);
    }

    #[test]
    fn domain_cases() {
        let r = PresentedRing::polynomial_ring(Field::Rational, &["x", "y"]).unwrap();
        assert!(standardized_radical(&r.ideal(&["x"]).unwrap(), None).unwrap().ideal.is_unit());
        assert!(standardized_radical(&r.zero_ideal(), None).unwrap().ideal.is_zero());
    }

    #[test]
    fn verification() {
        let r = PresentedRing::polynomial_ring(Field::Rational, &["x", "y", "z"]).unwrap();
        let i = r.ideal(&["x", "y*z"]).unwrap();
        let d = verify_decomposition(
            &i,
            vec![
                (r.ideal(&["x", "y"]).unwrap(), r.ideal(&["x", "y"]).unwrap()),
                (r.ideal(&["x", "z"]).unwrap(), r.ideal(&["x", "z"]).unwrap()),
            ],
        )
        .unwrap();
        assert!(d.is_verified());

        let j = r.ideal(&["x^2", "x*y"]).unwrap();
        let d = verify_decomposition(
            &j,
            vec![
                (r.ideal(&["x"]).unwrap(), r.ideal(&["x"]).unwrap()),
                (r.ideal(&["x^2", "y"]).unwrap(), r.ideal(&["x", "y"]).unwrap()),
            ],
        );
        assert!(d.is_ok());

        let x = r.ideal(&["x"]).unwrap();
        let err = verify_decomposition(&x, vec![(r.ideal(&["x^2"]).unwrap(), x.clone())]).unwrap_err();
        assert!(matches!(err, Error::IntersectionMismatch { .. }));

        let err = verify_decomposition(&x, vec![(x.clone(), r.ideal(&["x", "y"]).unwrap())]).unwrap_err();
        assert!(matches!(err, Error::DecompositionRejected { component: 1, .. }));
    }

    #[test]
    fn supplied_relation_decomposition() {
        // J = (x^2 - y^3) is prime in QQ[x,y]; nothing is verified about primality
        let ring = PresentedRing::parse(Field::Rational, &["x", "y"], &["x^2 - y^3"]).unwrap();
        let j = ring.relations().to_vec();
        let ring = PresentedRing::with_relation_decomposition(
            ring.field(),
            ring.names().to_vec(),
            j.clone(),
            vec![(j.clone(), j)],
        )
        .unwrap();
        let primes = relation_associated_primes(&ring).unwrap();
        assert_eq!(primes.len(), 1);
        assert!(primes[0].is_zero());
        let i = ring.ideal(&["x", "y"]).unwrap();
        let d = verify_decomposition(&i, vec![(i.clone(), i.clone())]).unwrap();
        assert!(!d.components()[0].status.is_assumed());
        assert!(standardized_radical(&i, Some(d)).unwrap().ideal.is_unit());
    }
}
