//! Dense univariate polynomials over the rationals.
//!
//! These back the field of rational functions in `q`. Coefficients are
//! arbitrary-precision rationals; the zero polynomial is the empty
//! coefficient vector, so `degree` of zero is `None`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

/// A polynomial in one variable with rational coefficients.
///
/// Invariant: no trailing zero coefficient (the leading coefficient of a
/// nonzero polynomial is nonzero).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<BigRational>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            QPolynomial::zero()
        } else {
            QPolynomial { coeffs: vec![c] }
        }
    }

    /// `c * x^k`.
    pub fn monomial(k: usize, c: BigRational) -> Self {
        if c.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        QPolynomial { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn neg(&self) -> Self {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        QPolynomial::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return QPolynomial::zero();
        }
        QPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Scale so the leading coefficient becomes 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => QPolynomial::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `deg r < deg divisor`. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return (QPolynomial::zero(), self.clone());
        }
        let lc_inv = divisor.leading_coeff().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd - 1] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let t = &rem[k + i] - &(d * &c);
                rem[k + i] = t;
            }
            quot[k] = c;
        }
        (QPolynomial::from_coeffs(quot), QPolynomial::from_coeffs(rem))
    }

    /// Exact division; panics when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}

/// Clears denominators and divides by the integer content, with a positive
/// leading coefficient. Returns the empty vector for zero.
fn primitive_int(p: &QPolynomial) -> Vec<BigInt> {
    if p.is_zero() {
        return Vec::new();
    }
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if ints.last().unwrap().is_negative() {
        content = -content;
    }
    for c in &mut ints {
        *c = &*c / &content;
    }
    ints
}

fn int_content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
    }
    g
}

/// Pseudo-remainder of integer polynomials, reduced to primitive form.
/// Keeps coefficient growth under control during the gcd loop.
fn primitive_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len();
    let lb = b.last().unwrap().clone();
    while rem.len() >= db {
        let k = rem.len() - db;
        let lr = rem.last().unwrap().clone();
        for c in rem.iter_mut() {
            *c = &*c * &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            let t = &rem[k + i] - &(bc * &lr);
            rem[k + i] = t;
        }
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
        if rem.is_empty() {
            return rem;
        }
        let mut content = int_content(&rem);
        if rem.last().unwrap().is_negative() {
            content = -content;
        }
        for c in &mut rem {
            *c = &*c / &content;
        }
    }
    rem
}

/// Monic greatest common divisor over the rationals.
pub fn poly_gcd(a: &QPolynomial, b: &QPolynomial) -> QPolynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let mut x = primitive_int(a);
    let mut y = primitive_int(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = primitive_prem(&x, &y);
        x = y;
        y = r;
    }
    QPolynomial::from_coeffs(
        x.into_iter().map(BigRational::from_integer).collect(),
    )
    .monic()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    #[test]
    fn mul_and_divide_roundtrip() {
        let a = p(&[1, 2, 1]); // (1+x)^2
        let b = p(&[-1, 1]); // x-1
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&b), a);
        let (q, r) = prod.add(&QPolynomial::one()).div_rem(&b);
        assert_eq!(q, a);
        assert_eq!(r, QPolynomial::one());
    }

    #[test]
    fn gcd_of_cyclotomic_like_factors() {
        // gcd(1-x^2, 1-x) = x-1 up to normalization (monic)
        let g = poly_gcd(&p(&[1, 0, -1]), &p(&[1, -1]));
        assert_eq!(g, p(&[-1, 1]).monic());
        // coprime
        let g2 = poly_gcd(&p(&[1, 1]), &p(&[1, 0, 1]));
        assert!(g2.is_one());
    }

    #[test]
    fn gcd_with_zero() {
        assert_eq!(poly_gcd(&QPolynomial::zero(), &p(&[2, 2])), p(&[1, 1]));
        assert!(poly_gcd(&QPolynomial::zero(), &QPolynomial::zero()).is_zero());
    }
}
