use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Reduced arbitrary-precision fraction with positive denominator.
pub type Rational = BigRational;

/// Binary64 complex number.
pub type Complex = Complex64;

/// Commutative ring with identity; enough structure for polynomial algebra.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    fn ipow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// A field in which formulas of the crate are evaluated: exact rationals or
/// binary64 complex numbers.
pub trait Scalar: Ring + Div<Output = Self> {
    /// Size used for tolerance comparisons (`|x|`, possibly infinite for huge
    /// rationals).
    fn magnitude(&self) -> f64;

    fn from_frac(n: i64, d: i64) -> Self {
        Self::from_i64(n) / Self::from_i64(d)
    }
}

impl Ring for Rational {
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

impl Scalar for Rational {
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
}

impl Ring for Complex {
    fn from_i64(n: i64) -> Self {
        Complex::new(n as f64, 0.0)
    }
}

impl Scalar for Complex {
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// `n/d` as a reduced rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `2^a * 3^b` exactly (exponents may be negative).
pub fn pow2_3(a: i32, b: i32) -> Rational {
    let two = Rational::from_i64(2);
    let three = Rational::from_i64(3);
    let p = |base: &Rational, e: i32| {
        let v = base.ipow(e.unsigned_abs());
        if e < 0 {
            v.recip()
        } else {
            v
        }
    };
    p(&two, a) * p(&three, b)
}

pub fn to_complex(r: &Rational) -> Complex {
    Complex::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
}

/// Parses `"p"`, `"p/q"` or a finite decimal such as `"-1.25"` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::domain(format!("cannot parse {s:?} as an exact rational"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::domain(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_part: BigInt = match int {
            "" | "-" | "+" => BigInt::zero(),
            _ => int.parse().map_err(|_| bad())?,
        };
        let digits: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let magnitude = Rational::from_integer(int_part.abs()) + Rational::new(digits, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// The nonnegative rational square root, if `r` is a square in Q.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Evaluates `sum c * prod vars[k]^e[k]` over a table of integer-coefficient
/// monomials.
pub fn eval_sparse<T: Ring, const N: usize>(terms: &[(i64, [u32; N])], vars: &[T; N]) -> T {
    let mut powers: Vec<Vec<T>> = vars.iter().map(|v| vec![T::one(), v.clone()]).collect();
    let mut acc = T::zero();
    for (c, exps) in terms {
        let mut term = T::from_i64(*c);
        for (k, &e) in exps.iter().enumerate() {
            let pk = &mut powers[k];
            while pk.len() <= e as usize {
                let next = pk[pk.len() - 1].clone() * vars[k].clone();
                pk.push(next);
            }
            if e > 0 {
                term = term * pk[e as usize].clone();
            }
        }
        acc = acc + term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_rational_spellings() {
        assert_eq!(parse_rational("550").unwrap(), rat(550, 1));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("-1.25").unwrap(), rat(-5, 4));
        assert_eq!(parse_rational("0.5").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn formats_integers_without_denominator() {
        assert_eq!(format_rational(&rat(2073600, 1)), "2073600");
        assert_eq!(format_rational(&rat(-2073600, 16384)), "-2025/16");
    }

    #[test]
    fn square_roots() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-4, 1)), None);
        assert_eq!(rational_sqrt(&rat(0, 1)), Some(rat(0, 1)));
    }

    #[test]
    fn powers_of_two_and_three() {
        assert_eq!(pow2_3(3, 1), rat(24, 1));
        assert_eq!(pow2_3(-14, 0), rat(1, 16384));
        assert_eq!(pow2_3(-1, -2), rat(1, 18));
    }
}
