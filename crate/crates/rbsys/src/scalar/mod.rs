//! Exact scalar fields: the rationals, rational functions in `q`, and
//! prime fields.
//!
//! Every value carries its field, values are kept in canonical form, and
//! equality is structural. Canonical forms: reduced fractions with positive
//! denominator; rational functions with coprime numerator/denominator and
//! monic denominator; prime-field residues in `[0, p)`.

mod parse;
mod poly;
mod ratfunc;

pub use parse::parse_scalar;
pub use poly::{poly_gcd, QPolynomial};
pub use ratfunc::RatFunc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime modulus {0} too large (must fit in 31 bits)")]
    ModulusTooLarge(u64),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// One of the three coefficient fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    RationalFunctionsInQ,
    PrimeField(u64),
}

impl FieldSpec {
    /// Prime-field constructor; rejects composite or oversized moduli.
    pub fn prime_field(p: u64) -> Result<FieldSpec, ScalarError> {
        if p > (1 << 31) - 1 {
            return Err(ScalarError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::RationalFunctionsInQ => Scalar::RatFunc(RatFunc::zero()),
            FieldSpec::PrimeField(p) => Scalar::Mod { value: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::one()),
            FieldSpec::RationalFunctionsInQ => Scalar::RatFunc(RatFunc::one()),
            FieldSpec::PrimeField(p) => Scalar::Mod { value: 1 % *p, p: *p },
        }
    }

    pub fn integer(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => {
                Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
            }
            FieldSpec::RationalFunctionsInQ => Scalar::RatFunc(
                RatFunc::from_rational(BigRational::from_integer(BigInt::from(n))),
            ),
            FieldSpec::PrimeField(p) => {
                let v = n.rem_euclid(*p as i64) as u64;
                Scalar::Mod { value: v, p: *p }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::RationalFunctionsInQ => write!(f, "Q(q)"),
            FieldSpec::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of one of the supported fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    RatFunc(RatFunc),
    Mod { value: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::RatFunc(_) => FieldSpec::RationalFunctionsInQ,
            Scalar::Mod { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::RatFunc(f) => f.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::RatFunc(f) => f.is_one(),
            Scalar::Mod { value, p } => *value == 1 % *p,
        }
    }

    fn check_same_field(&self, other: &Scalar) {
        assert_eq!(
            self.field(),
            other.field(),
            "scalar arithmetic across distinct fields"
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check_same_field(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::RatFunc(a), Scalar::RatFunc(b)) => Scalar::RatFunc(a.add(b)),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: (a + b) % p,
                p: *p,
            },
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::RatFunc(a) => Scalar::RatFunc(a.neg()),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: (p - value) % p,
                p: *p,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check_same_field(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::RatFunc(a), Scalar::RatFunc(b)) => Scalar::RatFunc(a.mul(b)),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: (a * b) % p,
                p: *p,
            },
            _ => unreachable!(),
        }
    }

    pub fn inverse(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rational(a) => {
                if a.is_zero() {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(a.recip()))
                }
            }
            Scalar::RatFunc(a) => Ok(Scalar::RatFunc(a.inverse()?)),
            Scalar::Mod { value, p } => {
                if *value == 0 {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Mod {
                        value: mod_inverse(*value, *p),
                        p: *p,
                    })
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(&other.inverse()?))
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p); p is prime and a != 0 mod p
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "modulus not coprime to element");
    t.rem_euclid(p as i128) as u64
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::add(self, rhs)
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Prints a polynomial in ascending powers of `q`, e.g. `1+q-1/2*q^2`.
/// The output re-parses to the same polynomial.
pub(crate) fn poly_to_string(p: &QPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut term = String::new();
        let abs = c.abs();
        match k {
            0 => term.push_str(&rational_to_string(&abs)),
            _ => {
                if !abs.is_one() {
                    term.push_str(&rational_to_string(&abs));
                    term.push('*');
                }
                if k == 1 {
                    term.push('q');
                } else {
                    term.push_str(&format!("q^{k}"));
                }
            }
        }
        if first {
            if c.is_negative() {
                out.push('-');
            }
            first = false;
        } else {
            out.push(if c.is_negative() { '-' } else { '+' });
        }
        out.push_str(&term);
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", rational_to_string(r)),
            Scalar::RatFunc(rf) => {
                if rf.is_polynomial() {
                    write!(f, "{}", poly_to_string(rf.numer()))
                } else {
                    write!(
                        f,
                        "({})/({})",
                        poly_to_string(rf.numer()),
                        poly_to_string(rf.denom())
                    )
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction() {
        assert!(FieldSpec::prime_field(5).is_ok());
        assert_eq!(FieldSpec::prime_field(6), Err(ScalarError::NotPrime(6)));
        assert_eq!(FieldSpec::prime_field(1), Err(ScalarError::NotPrime(1)));
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(1 << 40).is_err());
    }

    #[test]
    fn mod_arithmetic() {
        let f = FieldSpec::prime_field(5).unwrap();
        let a = f.integer(7);
        assert_eq!(a, f.integer(2));
        let inv = f.integer(3).inverse().unwrap();
        assert_eq!(f.integer(3).mul(&inv), f.one());
        assert!(f.zero().inverse().is_err());
        assert_eq!(f.integer(-1), f.integer(4));
    }

    #[test]
    fn display_roundtrip_examples() {
        let q = FieldSpec::Rationals;
        let x = q.integer(-3).div(&q.integer(4)).unwrap();
        assert_eq!(x.to_string(), "-3/4");
        let qq = FieldSpec::RationalFunctionsInQ;
        let one_plus_q = parse_scalar("(1-q^2)/(1-q)", qq).unwrap();
        assert_eq!(one_plus_q.to_string(), "1+q");
    }
}
