//! Text syntax for polynomials: `x^2*y - 3/2*z`.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ['/' integer] | name | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{PolyContext, Polynomial};
use crate::error::PolyError;

/// Parses `text` as a polynomial in the variables `names`.
pub fn parse_polynomial(text: &str, names: &[String], ctx: PolyContext) -> Result<Polynomial, PolyError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, names, ctx };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(f)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
    ctx: PolyContext,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse { column: self.pos + 1, message: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            if self.eat(b'+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.try_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as integer"))
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut den = BigInt::from(1);
                let save = self.pos;
                if self.eat(b'/') {
                    self.skip_ws();
                    if self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                        den = self.integer()?;
                        if den.is_zero() {
                            return Err(self.error("division by zero"));
                        }
                    } else {
                        self.pos = save;
                        return Err(self.error("only integer literals may be divided"));
                    }
                }
                let q = BigRational::new(num, den);
                let c = self.ctx.field.from_rational(&q)?;
                Ok(Polynomial::constant(self.ctx, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
                match self.names.iter().position(|n| n == name) {
                    Some(i) => Ok(Polynomial::var(self.ctx, i)),
                    None => {
                        self.pos = start;
                        Err(self.error(&format!("unknown variable '{name}'")))
                    }
                }
            }
            Some(_) => Err(self.error("expected number, variable or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;
    use crate::scalar::Field;

    fn ctx(n: usize) -> PolyContext {
        PolyContext::new(n, Field::Rational, MonomialOrder::Grevlex)
    }

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into(), "z".into()]
    }

    #[test]
    fn parses_and_prints_canonically() {
        let n = names();
        for (src, canon) in [
            ("x^2*y - 3/2*z", "x^2*y - 3/2*z"),
            ("(x+y)^2", "x^2 + 2*x*y + y^2"),
            ("-z + x", "x - z"),
            ("2*3", "6"),
            ("x*y - y*x", "0"),
            ("+ 1/2*x", "1/2*x"),
        ] {
            let f = parse_polynomial(src, &n, ctx(3)).unwrap();
            assert_eq!(f.display(&n).to_string(), canon, "input {src}");
        }
    }

    #[test]
    fn reports_positions() {
        let n = names();
        let err = parse_polynomial("x + w", &n, ctx(3)).unwrap_err();
        assert_eq!(err, PolyError::Parse { column: 5, message: "unknown variable 'w'".into() });
        assert!(matches!(parse_polynomial("x +", &n, ctx(3)), Err(PolyError::Parse { column: 4, .. })));
        assert!(parse_polynomial("x)", &n, ctx(3)).is_err());
        assert!(parse_polynomial("x/y", &n, ctx(3)).is_err());
    }

    #[test]
    fn fractions_over_prime_fields() {
        let n = names();
        let c = PolyContext::new(3, Field::Prime(7), MonomialOrder::Grevlex);
        let f = parse_polynomial("1/2*x", &n, c).unwrap();
        assert_eq!(f.display(&n).to_string(), "4*x");
        assert!(parse_polynomial("1/7", &n, c).is_err());
    }
}
