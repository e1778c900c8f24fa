//! Power sums of the Satake coordinates, the Satake sextic whose roots they
//! are, and the map `Phi` sending a genus-two curve to `y^2 = f(x)`.

mod phi;
mod reconstruct;
mod tables;

pub use phi::{phi_map, phi_map_igusa, phi_polynomials, PhiPolynomials, PhiResult};
pub use reconstruct::{
    fit_power_sum_rescaling, reconstruct_auto, reconstruct_best, reconstruct_from_satake_roots,
    roundtrip, satake_roots, PowerSumRescaling, RoundTrip, ORDERING_THRESHOLD,
};

use crate::error::{Error, Result};
use crate::exactmath::{pow2_3, Polynomial, Rational, Ring, Scalar};
use crate::invariants::{q_polynomial, siegel_from_igusa, IgusaInvariants, SiegelForms};

/// Power sums `s_1 .. s_6` of the six Satake coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSums<T = Rational> {
    pub s: [T; 6],
}

impl<T: Scalar> PowerSums<T> {
    /// Fills in `s1 = 0` and `s4 = s2^2 / 4`.
    pub fn from_free(s2: T, s3: T, s5: T, s6: T) -> Self {
        let s4 = s2.clone() * s2.clone() / T::from_i64(4);
        PowerSums {
            s: [T::zero(), s2, s3, s4, s5, s6],
        }
    }

    /// `s_j` for `j` in `1..=6`.
    pub fn get(&self, j: usize) -> T {
        self.s[j - 1].clone()
    }

    pub fn of_roots(x: &[T; 6]) -> Self {
        PowerSums {
            s: std::array::from_fn(|j| {
                x.iter()
                    .fold(T::zero(), |acc, v| acc + v.ipow(j as u32 + 1))
            }),
        }
    }
}

impl PowerSums<Rational> {
    /// Checks `s1 = 0` and `s2^2 = 4 s4` exactly.
    pub fn validate(&self) -> Result<()> {
        if self.get(1) != Rational::from_i64(0) {
            return Err(Error::violation("power sums violate s1 = 0"));
        }
        let s2 = self.get(2);
        if &s2 * &s2 != Rational::from_i64(4) * self.get(4) {
            return Err(Error::violation("power sums violate s2^2 = 4 s4"));
        }
        Ok(())
    }
}

pub fn power_sums_from_igusa<T: Scalar>(inv: &IgusaInvariants<T>) -> PowerSums<T> {
    let [i2, i4, i6, i10] = inv.as_array();
    let q = |n: i64, d: i64| T::from_frac(n, d);
    let s2 = q(3, 1) * i4.clone();
    let s3 = q(3, 2) * i2.clone() * i4.clone() - q(9, 2) * i6.clone();
    let s5 = q(15, 8) * i2.clone() * i4.clone() * i4.clone() - q(45, 8) * i4.clone() * i6.clone()
        + q(1215, 1) * i10.clone();
    let s6 = q(27, 16) * i4.ipow(3) + q(3, 8) * i2.ipow(2) * i4.ipow(2)
        - q(9, 4) * i2.clone() * i4.clone() * i6.clone()
        + q(27, 8) * i6.ipow(2)
        + q(729, 4) * i2 * i10;
    PowerSums::from_free(s2, s3, s5, s6)
}

/// Inverse of [`power_sums_from_igusa`]; singular when `5 s2 s3 = 12 s5`.
pub fn igusa_from_power_sums<T: Scalar>(ps: &PowerSums<T>) -> Result<IgusaInvariants<T>> {
    let (s2, s3, s5, s6) = (ps.get(2), ps.get(3), ps.get(5), ps.get(6));
    let k = |n: i64| T::from_i64(n);
    let den = k(5) * s2.clone() * s3.clone() - k(12) * s5.clone();
    if den.is_zero() {
        return Err(Error::InversionSingular("5 s2 s3 - 12 s5 = 0".into()));
    }
    let i2 = T::from_frac(5, 3) * (k(3) * s2.ipow(3) + k(8) * s3.ipow(2) - k(48) * s6.clone())
        / den.clone();
    let i4 = s2.clone() / k(3);
    let i6 = T::from_frac(1, 27)
        * (k(15) * s2.ipow(4) + k(10) * s2.clone() * s3.ipow(2) - k(240) * s2.clone() * s6
            + k(72) * s3.clone() * s5.clone())
        / den;
    let i10 = -(s2 * s3) / k(2916) + s5 / k(1215);
    Ok(IgusaInvariants::new(i2, i4, i6, i10))
}

/// Complete Bell polynomial `B_i(z_1, .., z_i)` for `1 <= i <= 6`.
pub fn complete_bell<T: Scalar>(i: usize, z: &[T; 6]) -> Result<T> {
    if !(1..=6).contains(&i) {
        return Err(Error::domain(format!(
            "Bell polynomial order {i} outside 1..=6"
        )));
    }
    Ok(bell_table(z)[i].clone())
}

fn bell_table<T: Scalar>(z: &[T; 6]) -> [T; 7] {
    let mut b: [T; 7] = std::array::from_fn(|_| T::zero());
    b[0] = T::one();
    for m in 1..=6 {
        let mut acc = T::zero();
        let mut binom: i64 = 1;
        for k in 0..m {
            acc = acc + T::from_i64(binom) * b[m - 1 - k].clone() * z[k].clone();
            binom = binom * (m - 1 - k) as i64 / (k + 1) as i64;
        }
        b[m] = acc;
    }
    b
}

/// `Z = (s1, -s2, 2! s3, -3! s4, 4! s5, -5! s6)`.
pub fn bell_arguments<T: Scalar>(ps: &PowerSums<T>) -> [T; 6] {
    let mut fact = 1i64;
    std::array::from_fn(|k| {
        if k > 0 {
            fact *= k as i64;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        T::from_i64(sign * fact) * ps.s[k].clone()
    })
}

/// `x^6 + sum (-1)^i / i! B_i(Z) x^(6-i)`.
pub fn satake_sextic_bell<T: Scalar>(ps: &PowerSums<T>) -> Polynomial<T> {
    let b = bell_table(&bell_arguments(ps));
    let mut c: Vec<T> = vec![T::zero(); 7];
    c[6] = T::one();
    let mut fact = 1i64;
    for i in 1..=6 {
        fact *= i as i64;
        let sign = if i % 2 == 0 { 1 } else { -1 };
        c[6 - i] = b[i].clone() * T::from_frac(sign, fact);
    }
    Polynomial::new(c)
}

/// `(x^3 - s2/4 x - s3/6)^2 + (s2 s3/12 - s5/5) x + s2^3/96 + s3^2/36 - s6/6`.
pub fn satake_sextic_closed<T: Scalar>(ps: &PowerSums<T>) -> Polynomial<T> {
    let (s2, s3, s5, s6) = (ps.get(2), ps.get(3), ps.get(5), ps.get(6));
    let q = |n: i64, d: i64| T::from_frac(n, d);
    let cubic = Polynomial::new(vec![
        -(s3.clone() * q(1, 6)),
        -(s2.clone() * q(1, 4)),
        T::zero(),
        T::one(),
    ]);
    let linear = Polynomial::new(vec![
        s2.ipow(3) * q(1, 96) + s3.ipow(2) * q(1, 36) - s6 * q(1, 6),
        s2 * s3 * q(1, 12) - s5 * q(1, 5),
    ]);
    &cubic * &cubic + linear
}

/// `(x^3 - 3 psi4 x - 2 psi6)^2 + 2^14 3^5 (chi10 x - 3 chi12)`.
pub fn satake_sextic_from_siegel(s: &SiegelForms) -> Polynomial<Rational> {
    let k = |n: i64| Rational::from_i64(n);
    let cubic = Polynomial::new(vec![-k(2) * &s.psi6, -k(3) * &s.psi4, k(0), k(1)]);
    let c = pow2_3(14, 5);
    let linear = Polynomial::new(vec![-k(3) * &c * &s.chi12, &c * &s.chi10]);
    &cubic * &cubic + linear
}

/// The monic Satake sextic, built both from the Bell expansion and from the
/// closed form; a disagreement is an internal identity violation.
pub fn satake_sextic(ps: &PowerSums<Rational>) -> Result<Polynomial<Rational>> {
    ps.validate()?;
    let bell = satake_sextic_bell(ps);
    let closed = satake_sextic_closed(ps);
    if bell != closed {
        return Err(Error::violation(
            "Bell expansion and closed form of the Satake sextic differ",
        ));
    }
    Ok(closed)
}

/// Both sides of `disc(f) = 2^52 3^21 Q`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscriminantReport {
    pub discriminant: Rational,
    pub q: Rational,
    pub holds: bool,
}

pub fn satake_discriminant_identity(inv: &IgusaInvariants) -> Result<DiscriminantReport> {
    let f = satake_sextic(&power_sums_from_igusa(inv))?;
    check_discriminant_identity(&f, inv)
}

/// Checks a supplied sextic against the invariants it claims to come from.
pub fn check_discriminant_identity(
    f: &Polynomial<Rational>,
    inv: &IgusaInvariants,
) -> Result<DiscriminantReport> {
    let discriminant = f.discriminant()?;
    let q = q_polynomial(&siegel_from_igusa(inv));
    if discriminant != pow2_3(52, 21) * &q {
        return Err(Error::violation(
            "discriminant of the Satake sextic differs from 2^52 3^21 Q",
        ));
    }
    Ok(DiscriminantReport {
        discriminant,
        q,
        holds: true,
    })
}
