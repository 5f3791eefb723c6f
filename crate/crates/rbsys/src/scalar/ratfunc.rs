//! Rational functions in `q` over the rationals, in canonical form.

use super::poly::{poly_gcd, QPolynomial};
use super::ScalarError;
use num::rational::BigRational;
use num::One;

/// A rational function `num/den` in lowest terms.
///
/// Invariants: `den` is monic and nonzero, `gcd(num, den) = 1`, and zero is
/// represented as `0/1`. Equality of values is therefore structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: QPolynomial,
    den: QPolynomial,
}

impl RatFunc {
    pub fn new(num: QPolynomial, den: QPolynomial) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: QPolynomial, den: QPolynomial) -> Self {
        if num.is_zero() {
            return RatFunc {
                num: QPolynomial::zero(),
                den: QPolynomial::one(),
            };
        }
        let g = poly_gcd(&num, &den);
        let mut n = num.exact_div(&g);
        let mut d = den.exact_div(&g);
        if !d.is_monic() {
            let lc = d.leading_coeff().unwrap().recip();
            n = n.scale(&lc);
            d = d.scale(&lc);
        }
        RatFunc { num: n, den: d }
    }

    pub fn from_poly(p: QPolynomial) -> Self {
        RatFunc {
            num: p,
            den: QPolynomial::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        RatFunc::from_poly(QPolynomial::constant(c))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(QPolynomial::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(QPolynomial::one())
    }

    /// The variable `q` itself.
    pub fn var() -> Self {
        RatFunc::from_poly(QPolynomial::monomial(1, BigRational::one()))
    }

    pub fn numer(&self) -> &QPolynomial {
        &self.num
    }

    pub fn denom(&self) -> &QPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self
            .num
            .mul(&other.den)
            .add(&self.den.mul(&other.num));
        let den = self.den.mul(&other.den);
        Self::reduced(num, den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Multiply with cross-cancellation so the final gcd calls stay small.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let n = self.num.exact_div(&g1).mul(&other.num.exact_div(&g2));
        let d = self.den.exact_div(&g2).mul(&other.den.exact_div(&g1));
        Self::reduced(n, d)
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;

    fn poly(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    #[test]
    fn geometric_cancellation() {
        // (1-q^2)/(1-q) = 1+q
        let f = RatFunc::new(poly(&[1, 0, -1]), poly(&[1, -1])).unwrap();
        assert_eq!(f, RatFunc::from_poly(poly(&[1, 1])));
        assert!(f.is_polynomial());
    }

    #[test]
    fn denominator_is_monic() {
        // 1/(2-2q) --> (-1/2)/(q-1)
        let f = RatFunc::new(poly(&[1]), poly(&[2, -2])).unwrap();
        assert!(f.denom().is_monic());
        let back = f.mul(&RatFunc::from_poly(poly(&[2, -2])));
        assert!(back.is_one());
    }

    #[test]
    fn field_ops() {
        let q = RatFunc::var();
        let a = RatFunc::new(poly(&[1]), poly(&[1, -1])).unwrap(); // 1/(1-q)
        let sum = a.add(&q);
        let diff = sum.sub(&q);
        assert_eq!(diff, a);
        assert!(a.mul(&a.inverse().unwrap()).is_one());
        assert!(RatFunc::zero().inverse().is_err());
    }
}
