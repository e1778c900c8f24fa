//! Igusa-Clebsch invariants, absolute invariants and the dictionary with the
//! even Siegel modular forms `psi4, psi6, chi10, chi12`.

mod tables;
mod transvectant;

use crate::error::{Error, Result};
use crate::exactmath::{eval_sparse, pow2_3, Polynomial, Rational, Ring, Scalar};
use transvectant::{clebsch_invariants, BinaryForm};

/// `Y^2 = X (X - 1) (X - l1) (X - l2) (X - l3)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RosenhainCurve<T = Rational> {
    pub lambda: [T; 3],
}

impl<T: Scalar> RosenhainCurve<T> {
    /// Rejects repeated roots and roots at 0 or 1.
    pub fn new(lambda: [T; 3]) -> Result<Self> {
        let zero = T::zero();
        let one = T::one();
        for i in 0..3 {
            if lambda[i] == zero || lambda[i] == one {
                return Err(Error::domain(format!(
                    "Rosenhain root {} must differ from 0 and 1",
                    i + 1
                )));
            }
            for j in (i + 1)..3 {
                if lambda[i] == lambda[j] {
                    return Err(Error::domain(format!(
                        "Rosenhain roots {} and {} coincide",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(RosenhainCurve { lambda })
    }

    /// `F(X) = X (X - 1) (X - l1) (X - l2) (X - l3)`.
    pub fn quintic(&self) -> Polynomial<T> {
        let [l1, l2, l3] = self.lambda.clone();
        Polynomial::from_roots(&[T::zero(), T::one(), l1, l2, l3])
    }
}

/// Igusa-Clebsch invariants `[I2 : I4 : I6 : I10]`.
#[derive(Debug, Clone, PartialEq)]
pub struct IgusaInvariants<T = Rational> {
    pub i2: T,
    pub i4: T,
    pub i6: T,
    pub i10: T,
}

impl<T: Scalar> IgusaInvariants<T> {
    pub fn new(i2: T, i4: T, i6: T, i10: T) -> Self {
        IgusaInvariants { i2, i4, i6, i10 }
    }

    /// `I10 = 0`: the sextic has a repeated root.
    pub fn is_degenerate(&self) -> bool {
        self.i10.is_zero()
    }

    pub fn as_array(&self) -> [T; 4] {
        [
            self.i2.clone(),
            self.i4.clone(),
            self.i6.clone(),
            self.i10.clone(),
        ]
    }

    /// `(r^2 I2, r^4 I4, r^6 I6, r^10 I10)`.
    pub fn rescaled(&self, r: &T) -> Self {
        let r2 = r.clone() * r.clone();
        IgusaInvariants {
            i2: self.i2.clone() * r2.clone(),
            i4: self.i4.clone() * r2.ipow(2),
            i6: self.i6.clone() * r2.ipow(3),
            i10: self.i10.clone() * r2.ipow(5),
        }
    }
}

impl IgusaInvariants<Rational> {
    /// Equality in weighted projective space with weights `(2, 4, 6, 10)`.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        weighted_equal(&self.as_array(), &other.as_array(), &[1, 2, 3, 5])
    }
}

/// `a ~ b` iff `b_k = u^{w_k} a_k` for some nonzero `u` over the algebraic
/// closure, tested by cross-multiplication.
pub fn weighted_equal<T: Scalar, const N: usize>(a: &[T; N], b: &[T; N], w: &[u32; N]) -> bool {
    for k in 0..N {
        if a[k].is_zero() != b[k].is_zero() {
            return false;
        }
    }
    for k in 0..N {
        for l in (k + 1)..N {
            let lhs = a[k].ipow(w[l]) * b[l].ipow(w[k]);
            let rhs = a[l].ipow(w[k]) * b[k].ipow(w[l]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// The appendix polynomials in the elementary symmetric functions of the
/// Rosenhain roots. Repeated roots give `I10 = 0`, reported through
/// [`IgusaInvariants::is_degenerate`].
pub fn igusa_from_rosenhain<T: Scalar>(lambda: &[T; 3]) -> IgusaInvariants<T> {
    let [l1, l2, l3] = lambda.clone();
    let s = l1.clone() + l2.clone() + l3.clone();
    let p = l1.clone() * l2.clone() + l1.clone() * l3.clone() + l2.clone() * l3.clone();
    let r = l1.clone() * l2.clone() * l3.clone();
    let spr = [s, p, r];
    let one = T::one();
    let sq = |v: T| v.clone() * v;
    let i10 = sq(l1.clone() * l2.clone() * l3.clone())
        * sq(l3.clone() - one.clone())
        * sq(l2.clone() - one.clone())
        * sq(l2.clone() - l3.clone())
        * sq(l1.clone() - one)
        * sq(l1.clone() - l3)
        * sq(l1 - l2);
    IgusaInvariants {
        i2: eval_sparse(tables::I2_TERMS, &spr),
        i4: eval_sparse(tables::I4_TERMS, &spr),
        i6: eval_sparse(tables::I6_TERMS, &spr),
        i10,
    }
}

/// Invariants of `Y^2 = F(X)` for `F` of degree 5 or 6, via Clebsch's
/// transvectant invariants and Mestre's conversion. A quintic is treated as a
/// sextic with a root at infinity.
pub fn igusa_from_sextic<T: Scalar>(f: &Polynomial<T>) -> Result<IgusaInvariants<T>> {
    match f.degree() {
        Some(5) | Some(6) => {}
        d => {
            return Err(Error::domain(format!(
                "expected a sextic or quintic, got degree {}",
                d.map_or("-inf".to_string(), |d| d.to_string())
            )))
        }
    }
    let form = BinaryForm::new((0..=6).map(|i| f.coeff(i)).collect());
    let [a, b, c, d] = clebsch_invariants(&form);
    let k = |n: i64| T::from_i64(n);
    let a2 = a.clone() * a.clone();
    let a3 = a2.clone() * a.clone();
    let i2 = k(-120) * a.clone();
    let i4 = k(-720) * a2.clone() + k(6750) * b.clone();
    let i6 = k(8640) * a3.clone() - k(108000) * a.clone() * b.clone() + k(202500) * c.clone();
    let i10 = k(-62208) * a3.clone() * a2.clone()
        + k(972000) * a3 * b.clone()
        + k(1620000) * a2 * c.clone()
        - k(3037500) * a.clone() * b.clone() * b.clone()
        - k(6075000) * b * c
        - k(4556250) * d;
    Ok(IgusaInvariants { i2, i4, i6, i10 })
}

/// Igusa functions `(I2^5, I4 I2^3, I6 I2^2) / I10`.
#[derive(Debug, Clone, PartialEq)]
pub struct AbsoluteInvariants<T = Rational> {
    pub j1: T,
    pub j2: T,
    pub j3: T,
}

impl<T: Scalar> AbsoluteInvariants<T> {
    pub fn as_array(&self) -> [T; 3] {
        [self.j1.clone(), self.j2.clone(), self.j3.clone()]
    }

    /// Largest componentwise `|a - b| / max(|a|, |b|, 1)`.
    pub fn max_rel_diff(&self, other: &Self) -> f64 {
        self.as_array()
            .iter()
            .zip(other.as_array().iter())
            .map(|(a, b)| {
                let d = (a.clone() - b.clone()).magnitude();
                d / a.magnitude().max(b.magnitude()).max(1.0)
            })
            .fold(0.0, f64::max)
    }
}

pub fn absolute_invariants<T: Scalar>(inv: &IgusaInvariants<T>) -> Result<AbsoluteInvariants<T>> {
    if inv.i10.is_zero() {
        return Err(Error::NotACurve("I10 = 0".into()));
    }
    let i2 = &inv.i2;
    let i22 = i2.clone() * i2.clone();
    let i23 = i22.clone() * i2.clone();
    Ok(AbsoluteInvariants {
        j1: i23.clone() * i22.clone() / inv.i10.clone(),
        j2: inv.i4.clone() * i23 / inv.i10.clone(),
        j3: inv.i6.clone() * i22 / inv.i10.clone(),
    })
}

/// Values of the even Siegel modular forms.
#[derive(Debug, Clone, PartialEq)]
pub struct SiegelForms<T = Rational> {
    pub psi4: T,
    pub psi6: T,
    pub chi10: T,
    pub chi12: T,
}

impl<T: Scalar> SiegelForms<T> {
    pub fn new(psi4: T, psi6: T, chi10: T, chi12: T) -> Self {
        SiegelForms {
            psi4,
            psi6,
            chi10,
            chi12,
        }
    }

    pub fn as_array(&self) -> [T; 4] {
        [
            self.psi4.clone(),
            self.psi6.clone(),
            self.chi10.clone(),
            self.chi12.clone(),
        ]
    }
}

/// `psi4 = I4/4`, `psi6 = (I2 I4 - 3 I6)/8`, `chi10 = -I10/2^14`,
/// `chi12 = I2 I10 / (3 * 2^17)`.
pub fn siegel_from_igusa(inv: &IgusaInvariants) -> SiegelForms {
    let IgusaInvariants { i2, i4, i6, i10 } = inv;
    SiegelForms {
        psi4: i4 / Rational::from_i64(4),
        psi6: (i2 * i4 - Rational::from_i64(3) * i6) / Rational::from_i64(8),
        chi10: -i10 * pow2_3(-14, 0),
        chi12: i2 * i10 * pow2_3(-17, -1),
    }
}

/// Inverse of [`siegel_from_igusa`]; undefined on the product locus.
pub fn igusa_from_siegel(s: &SiegelForms) -> Result<IgusaInvariants> {
    if s.chi10 == Rational::from_i64(0) {
        return Err(Error::ProductLocus);
    }
    let ratio = &s.chi12 / &s.chi10;
    Ok(IgusaInvariants {
        i2: Rational::from_i64(-24) * &ratio,
        i4: Rational::from_i64(4) * &s.psi4,
        i6: Rational::from_frac(-8, 3) * &s.psi6 - Rational::from_i64(32) * &s.psi4 * &ratio,
        i10: -pow2_3(14, 0) * &s.chi10,
    })
}

/// `Q = 2^12 3^9 chi35^2 / chi10`, evaluated as its degree-60 polynomial so it
/// is defined on `chi10 = 0` as well.
pub fn q_polynomial<T: Scalar>(s: &SiegelForms<T>) -> T {
    eval_sparse(tables::Q_TERMS, &s.as_array())
}

/// `chi35^2 = chi10 Q / (2^12 3^9)`.
pub fn chi35_squared(s: &SiegelForms) -> Rational {
    &s.chi10 * q_polynomial(s) * pow2_3(-12, -9)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DerivedForms {
    pub chi35_squared: Rational,
    pub q: Rational,
}

pub fn q_form(s: &SiegelForms) -> DerivedForms {
    let q = q_polynomial(s);
    DerivedForms {
        chi35_squared: &s.chi10 * &q * pow2_3(-12, -9),
        q,
    }
}

/// Membership in the Humbert surfaces of discriminant 1 and 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HumbertFlags {
    /// `chi10 = 0`: products of elliptic curves.
    pub on_h1: bool,
    /// `Q = 0`: curves with an extra involution.
    pub on_h4: bool,
}

pub fn humbert_predicates(s: &SiegelForms) -> HumbertFlags {
    HumbertFlags {
        on_h1: s.chi10 == Rational::from_i64(0),
        on_h4: q_polynomial(s) == Rational::from_i64(0),
    }
}
