use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{Rational, Ring};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients stored lowest degree first.
///
/// The representation is normalized: trailing zero coefficients are stripped,
/// so the zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// Builds `prod (x - r)`.
    pub fn from_roots(roots: &[T]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            acc * Self::new(vec![-r.clone(), T::one()])
        })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `self(q(x))`.
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            acc * q.clone() + Self::constant(c.clone())
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        self.ipow(e)
    }

    /// Order of vanishing at `x = 0`; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `x^n * self(1/x)` for `n >= deg`, the reversal used to look at infinity.
    pub fn reversed(&self, n: usize) -> Self {
        let mut c = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            assert!(i <= n, "reversal degree below polynomial degree");
            c[n - i] = a.clone();
        }
        Self::new(c)
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    fn combine(&self, rhs: &Self, f: impl Fn(T, T) -> T) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| f(self.coeff(i), rhs.coeff(i))).collect())
    }

    fn product(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<T: Ring> Zero for Polynomial<T> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Polynomial<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Ring> Ring for Polynomial<T> {
    fn from_i64(n: i64) -> Self {
        Self::constant(T::from_i64(n))
    }
}

impl<T: Ring> Add for Polynomial<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.combine(&rhs, |a, b| a + b)
    }
}

impl<T: Ring> Sub for Polynomial<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.combine(&rhs, |a, b| a - b)
    }
}

impl<T: Ring> Mul for Polynomial<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.product(&rhs)
    }
}

impl<T: Ring> Neg for Polynomial<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Ring> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        self.combine(rhs, |a, b| a + b)
    }
}

impl<T: Ring> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        self.combine(rhs, |a, b| a - b)
    }
}

impl<T: Ring> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        self.product(rhs)
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Polynomial").field(&self.coeffs).finish()
    }
}

// Exact algebra over Q.
impl Polynomial<Rational> {
    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&a| Rational::from_i64(a)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d
            .leading()
            .ok_or_else(|| Error::domain("division by the zero polynomial"))?
            .clone();
        let dn = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dn {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - dn];
        for k in (0..q.len()).rev() {
            let c = &r[k + dn] / &dl;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    r[k + j] = &r[k + j] - &c * dj;
                }
            }
            q[k] = c;
        }
        r.truncate(dn);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Exact quotient; errors when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::violation("polynomial division left a remainder"))
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        matches!(other.div_rem(self), Ok((_, r)) if r.is_zero())
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_part();
        }
        a.monic()
    }

    /// `self` divided by the content, as a polynomial with coprime integer
    /// coefficients and positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if self.leading().is_some_and(|l| l.is_negative()) {
            g = -g;
        }
        Self::new(
            ints.into_iter()
                .map(|c| Rational::from_integer(c / &g))
                .collect(),
        )
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Yun's decomposition: monic squarefree, pairwise coprime factors `a_i`
    /// with `self = lc * prod a_i^i`. Returned as `(a_i, i)` with constant
    /// factors omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = fp.div_exact(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).expect("gcd divides");
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_exact(&a).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Resultant by the Euclidean rule
    /// `res(p, q) = (-1)^{mn} lc(q)^{m - deg r} res(q, r)` with `r = p mod q`.
    pub fn resultant(&self, q: &Self) -> Result<Rational> {
        if self.is_zero() || q.is_zero() {
            return Err(Error::domain("resultant of the zero polynomial"));
        }
        let mut a = self.clone();
        let mut b = q.clone();
        let mut acc = Rational::one();
        loop {
            let m = a.degree().expect("nonzero");
            let n = b.degree().expect("nonzero");
            if n == 0 {
                return Ok(acc * b.coeffs[0].ipow(m as u32));
            }
            if m == 0 {
                return Ok(acc * a.coeffs[0].ipow(n as u32));
            }
            let (_, r) = a.div_rem(&b)?;
            if r.is_zero() {
                return Ok(Rational::zero());
            }
            let k = r.degree().expect("nonzero");
            if (m * n) % 2 == 1 {
                acc = -acc;
            }
            acc *= b.coeffs[n].ipow((m - k) as u32);
            a = b;
            b = r;
        }
    }

    /// `(-1)^{n(n-1)/2} res(p, p') / lc(p)`, which equals
    /// `lc^{2n-2} prod_{i<j} (r_i - r_j)^2` and hence the squared root-difference
    /// product for monic `p`.
    pub fn discriminant(&self) -> Result<Rational> {
        let n = match self.degree() {
            Some(n) if n >= 2 => n,
            _ => return Err(Error::domain("discriminant needs degree at least 2")),
        };
        let lc = self.leading().expect("nonzero").clone();
        let r = self.resultant(&self.derivative())?;
        let sign = if (n * (n - 1) / 2) % 2 == 1 { -1 } else { 1 };
        Ok(r * Rational::from_i64(sign) / lc)
    }

    /// Multiplicity of `d` as a factor of `self` (`usize::MAX` for zero).
    pub fn multiplicity_of(&self, d: &Self) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let mut k = 0;
        let mut cur = self.clone();
        loop {
            match cur.div_rem(d) {
                Ok((q, r)) if r.is_zero() => {
                    cur = q;
                    k += 1;
                }
                _ => return k,
            }
        }
    }
}
