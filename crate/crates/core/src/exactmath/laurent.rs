use std::ops::{Add, Mul, Neg, Sub};

use super::poly::Polynomial;
use super::scalar::Ring;
use crate::error::{Error, Result};

/// `eps^valuation * poly(eps)`: a Laurent polynomial in a formal variable `eps`
/// with coefficients in any ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<T> {
    pub valuation: i64,
    pub poly: Polynomial<T>,
}

impl<T: Ring> Laurent<T> {
    pub fn new(valuation: i64, poly: Polynomial<T>) -> Self {
        Laurent { valuation, poly }
    }

    pub fn constant(c: T) -> Self {
        Self::new(0, Polynomial::constant(c))
    }

    /// `c * eps^k` for any integer `k`.
    pub fn monomial(c: T, k: i64) -> Self {
        Self::new(k, Polynomial::constant(c))
    }

    /// Coefficient of `eps^k`.
    pub fn coeff(&self, k: i64) -> T {
        let i = k - self.valuation;
        if i < 0 {
            T::zero()
        } else {
            self.poly.coeff(i as usize)
        }
    }

    pub fn shift(&self, k: i64) -> Self {
        Self::new(self.valuation + k, self.poly.clone())
    }

    fn aligned(&self, rhs: &Self) -> (i64, Polynomial<T>, Polynomial<T>) {
        let v = self.valuation.min(rhs.valuation);
        let lift = |l: &Self| {
            let s = (l.valuation - v) as usize;
            &l.poly * &Polynomial::monomial(T::one(), s)
        };
        (v, lift(self), lift(rhs))
    }
}

impl<T: Ring> Add for Laurent<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (v, a, b) = self.aligned(&rhs);
        Laurent::new(v, a + b)
    }
}

impl<T: Ring> Sub for Laurent<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let (v, a, b) = self.aligned(&rhs);
        Laurent::new(v, a - b)
    }
}

impl<T: Ring> Mul for Laurent<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Laurent::new(self.valuation + rhs.valuation, self.poly * rhs.poly)
    }
}

impl<T: Ring> Neg for Laurent<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Laurent::new(self.valuation, -self.poly)
    }
}

/// The `eps -> 0` limit of `eps^order * expr`.
///
/// Every coefficient of a negative power of `eps` in the scaled expression must
/// vanish; a surviving one is reported as an identity violation.
pub fn laurent_limit<T: Ring>(expr: &Laurent<T>, order: i64) -> Result<T> {
    let scaled = expr.shift(order);
    for (i, c) in scaled.poly.coeffs().iter().enumerate() {
        let k = scaled.valuation + i as i64;
        if k >= 0 {
            break;
        }
        if !c.is_zero() {
            return Err(Error::violation(format!(
                "coefficient of eps^{k} does not vanish in the limit"
            )));
        }
    }
    Ok(scaled.coeff(0))
}
