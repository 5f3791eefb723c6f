//! Parser for coefficient expressions.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | power
//! power  := atom ('^' nat)?
//! atom   := nat | 'q' | '(' expr ')'
//! ```
//!
//! `q` is only admitted over the rational-function field. All arithmetic is
//! performed exactly in the target field, so `(1-q^2)/(1-q)` canonicalises
//! to the polynomial `1+q` and `7` over F5 to the residue `2`.

use super::{FieldSpec, QPolynomial, RatFunc, Scalar, ScalarError};
use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{One, ToPrimitive};

/// Degree cap for intermediate rational-function arithmetic. Keeps
/// adversarial inputs like `q^4096*q^4096*...` from ballooning.
const MAX_DEGREE: usize = 10_000;
const MAX_EXPONENT: usize = 4_096;

pub fn parse_scalar(text: &str, field: FieldSpec) -> Result<Scalar, ScalarError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        field,
    };
    p.skip_ws();
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    field: FieldSpec,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                let rhs = self.factor()?;
                acc = self.checked_mul(&acc, &rhs)?;
            } else if self.eat(b'/') {
                let rhs = self.factor()?;
                acc = acc.div(&rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, ScalarError> {
        if self.eat(b'-') {
            Ok(self.factor()?.neg())
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Scalar, ScalarError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let exp_pos = self.pos;
        let digits = self.nat_digits()?;
        let exp = BigUint::parse_bytes(digits.as_bytes(), 10)
            .and_then(|n| n.to_usize())
            .filter(|&n| n <= MAX_EXPONENT)
            .ok_or(ScalarError::Parse {
                pos: exp_pos,
                msg: format!("exponent exceeds {MAX_EXPONENT}"),
            })?;
        // square-and-multiply keeps intermediate degrees small
        let mut result = match self.field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::one()),
            FieldSpec::RationalFunctionsInQ => Scalar::RatFunc(RatFunc::one()),
            FieldSpec::PrimeField(p) => Scalar::Mod { value: 1 % p, p },
        };
        let mut sq = base;
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = self.checked_mul(&result, &sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = self.checked_mul(&sq.clone(), &sq)?;
            }
        }
        Ok(result)
    }

    fn checked_mul(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, ScalarError> {
        if let (Scalar::RatFunc(x), Scalar::RatFunc(y)) = (a, b) {
            let deg = |f: &RatFunc| {
                f.numer().degree().unwrap_or(0) + f.denom().degree().unwrap_or(0)
            };
            if deg(x) + deg(y) > MAX_DEGREE {
                return Err(ScalarError::Parse {
                    pos: self.pos,
                    msg: format!("intermediate degree exceeds {MAX_DEGREE}"),
                });
            }
        }
        Ok(a.mul(b))
    }

    fn nat_digits(&mut self) -> Result<String, ScalarError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .to_string();
        self.skip_ws();
        Ok(s)
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'q') => {
                if self.field != FieldSpec::RationalFunctionsInQ {
                    return Err(self.err("'q' is only valid over the rational-function field"));
                }
                self.pos += 1;
                self.skip_ws();
                Ok(Scalar::RatFunc(RatFunc::var()))
            }
            Some(b) if b.is_ascii_digit() => {
                let digits = self.nat_digits()?;
                let n = BigUint::parse_bytes(digits.as_bytes(), 10).unwrap();
                Ok(match self.field {
                    FieldSpec::Rationals => {
                        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
                    }
                    FieldSpec::RationalFunctionsInQ => {
                        Scalar::RatFunc(RatFunc::from_poly(QPolynomial::constant(
                            BigRational::from_integer(BigInt::from(n)),
                        )))
                    }
                    FieldSpec::PrimeField(p) => {
                        let v = (n % BigUint::from(p)).to_u64().unwrap();
                        Scalar::Mod { value: v, p }
                    }
                })
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        let f = FieldSpec::Rationals;
        assert_eq!(parse_scalar("-3/4", f).unwrap().to_string(), "-3/4");
        assert_eq!(parse_scalar("6/4", f).unwrap().to_string(), "3/2");
        assert_eq!(parse_scalar("2^10", f).unwrap(), f.integer(1024));
        assert_eq!(parse_scalar(" 1 + 2*3 ", f).unwrap(), f.integer(7));
        assert!(parse_scalar("1/0", f).is_err());
        assert!(parse_scalar("q", f).is_err());
        assert!(parse_scalar("1+", f).is_err());
        assert!(parse_scalar("(1", f).is_err());
        assert!(parse_scalar("1)", f).is_err());
        assert!(parse_scalar("", f).is_err());
    }

    #[test]
    fn rational_functions() {
        let f = FieldSpec::RationalFunctionsInQ;
        let v = parse_scalar("(1-q^2)/(1-q)", f).unwrap();
        assert_eq!(v, parse_scalar("1+q", f).unwrap());
        let w = parse_scalar("1/(1-q)", f).unwrap();
        assert_eq!(w.to_string(), "(-1)/(-1+q)");
        assert_eq!(parse_scalar(&w.to_string(), f).unwrap(), w);
        assert!(parse_scalar("1/(1-1)", f).is_err());
        assert!(parse_scalar("1/(q-q)", f).is_err());
        assert!(parse_scalar("q^5000", f).is_err());
    }

    #[test]
    fn prime_field() {
        let f = FieldSpec::prime_field(5).unwrap();
        assert_eq!(parse_scalar("7", f).unwrap(), f.integer(2));
        assert_eq!(parse_scalar("1/3", f).unwrap(), f.integer(2));
        assert_eq!(parse_scalar("-1", f).unwrap(), f.integer(4));
        assert!(parse_scalar("1/5", f).is_err());
    }

    #[test]
    fn error_positions() {
        let f = FieldSpec::Rationals;
        match parse_scalar("1+#", f) {
            Err(ScalarError::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
