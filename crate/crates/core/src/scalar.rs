//! Coefficient fields: exact rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::PolyError;

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rational numbers, with arbitrary-precision coefficients.
    Rational,
    /// The prime field `F_p` for a prime `p < 2^31`.
    Prime(u32),
}

impl Field {
    /// Builds `F_p`, rejecting composite or oversized moduli.
    pub fn prime(p: u32) -> Result<Self, PolyError> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(PolyError::InvalidModulus(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Residue { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Residue { value: n.rem_euclid(*p as i64) as u32, modulus: *p },
        }
    }

    /// Maps a rational number into the field. Over `F_p` this fails when
    /// the denominator is divisible by `p`.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar, PolyError> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let modulus = BigInt::from(*p);
                let reduce = |n: &BigInt| -> u32 {
                    let r = n % &modulus;
                    let r = if r.is_negative() { r + &modulus } else { r };
                    r.to_u32().expect("residue fits in u32")
                };
                let num = reduce(q.numer());
                let den = reduce(q.denom());
                if den == 0 {
                    return Err(PolyError::NotInvertible(q.to_string(), *p));
                }
                let den = Scalar::Residue { value: den, modulus: *p };
                Ok(&Scalar::Residue { value: num, modulus: *p } * &den.inv())
            }
        }
    }

    /// Whether `s` lives in this field.
    pub fn owns(&self, s: &Scalar) -> bool {
        matches!((self, s), (Field::Rational, Scalar::Rational(_)) | (Field::Prime(_), Scalar::Residue { .. }))
            && match (self, s) {
                (Field::Prime(p), Scalar::Residue { modulus, .. }) => p == modulus,
                _ => true,
            }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Rationals are kept in lowest terms with a positive
/// denominator, residues in `[0, p)`.
///
/// Arithmetic between a rational and a residue, or between residues of
/// different moduli, is a logic error and panics; polynomial-level
/// operations check field compatibility before reaching this point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero scalar");
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value as u64, (*modulus - 2) as u64, *modulus as u64) as u32,
                modulus: *modulus,
            },
        }
    }

    /// True when the printed form should carry a leading minus sign.
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Residue { .. } => false,
        }
    }

    pub(crate) fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.abs()),
            s => s.clone(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

macro_rules! residue_op {
    ($a:expr, $b:expr, |$x:ident, $y:ident, $m:ident| $body:expr) => {
        match ($a, $b) {
            (Scalar::Rational(_), _) | (_, Scalar::Rational(_)) => unreachable!(),
            (Scalar::Residue { value: $x, modulus: $m }, Scalar::Residue { value: $y, modulus: m2 }) => {
                assert_eq!($m, m2, "mixed prime fields");
                let ($x, $y, $m) = (*$x as u64, *$y as u64, *$m as u64);
                Scalar::Residue { value: ($body % $m) as u32, modulus: $m as u32 }
            }
        }
    };
}

fn kinds_match(a: &Scalar, b: &Scalar) {
    assert!(std::mem::discriminant(a) == std::mem::discriminant(b), "mixed scalar kinds in arithmetic");
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        kinds_match(self, rhs);
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (self, rhs) {
            return Scalar::Rational(a + b);
        }
        residue_op!(self, rhs, |x, y, m| x + y)
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        kinds_match(self, rhs);
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (self, rhs) {
            return Scalar::Rational(a - b);
        }
        residue_op!(self, rhs, |x, y, m| x + m - y)
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        kinds_match(self, rhs);
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (self, rhs) {
            return Scalar::Rational(a * b);
        }
        residue_op!(self, rhs, |x, y, m| x * y)
    }
}

impl std::ops::Div for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Residue { value, modulus } => {
                Scalar::Residue { value: (*modulus - *value) % *modulus, modulus: *modulus }
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_validation() {
        assert!(Field::prime(101).is_ok());
        assert!(Field::prime(2).is_ok());
        assert!(matches!(Field::prime(100), Err(PolyError::InvalidModulus(100))));
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn residue_arithmetic_wraps() {
        let f = Field::Prime(101);
        let a = f.from_i64(50);
        let b = f.from_i64(51);
        assert!((&a + &b).is_zero());
        assert_eq!(&f.from_i64(3) * &f.from_i64(3).inv(), f.one());
        assert_eq!(-&f.from_i64(1), f.from_i64(100));
    }

    #[test]
    fn rational_into_prime_field() {
        let f = Field::Prime(7);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.from_rational(&half).unwrap(), f.from_i64(4));
        let bad = BigRational::new(1.into(), 7.into());
        assert!(f.from_rational(&bad).is_err());
    }

    #[test]
    #[should_panic(expected = "mixed scalar kinds")]
    fn mixing_kinds_panics() {
        let _ = &Field::Rational.one() + &Field::Prime(5).one();
    }
}
