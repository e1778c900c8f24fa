//! Genus-two theta constants with half-integer characteristics.
//!
//! `theta[a; b](0, tau) = sum_v exp(pi i v^T tau v + 2 pi i v^T b)` with
//! `v = u + a`, `u` in `Z^2`. The sum is truncated to a box that is symmetric
//! in `v`, so odd characteristics cancel term by term.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::exactmath::{Complex, Scalar};

/// Default truncation radius for the theta series.
pub const DEFAULT_THETA_RADIUS: u32 = 12;

/// Relative size of the outermost shell above which a value is flagged.
pub const TAIL_WARNING: f64 = 1e-12;

/// A point `[[tau1, z], [z, tau2]]` of the Siegel upper half-space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodMatrix {
    pub tau1: Complex,
    pub z: Complex,
    pub tau2: Complex,
}

impl PeriodMatrix {
    pub fn new(tau1: Complex, z: Complex, tau2: Complex) -> Result<Self> {
        let finite = [tau1, z, tau2]
            .iter()
            .all(|c| c.re.is_finite() && c.im.is_finite());
        if !finite {
            return Err(Error::domain("period matrix entries must be finite"));
        }
        if tau2.im <= 0.0 || tau1.im * tau2.im <= z.im * z.im {
            return Err(Error::domain(
                "imaginary part of the period matrix is not positive definite",
            ));
        }
        Ok(PeriodMatrix { tau1, z, tau2 })
    }

    pub fn diagonal(tau1: Complex, tau2: Complex) -> Result<Self> {
        Self::new(tau1, Complex::new(0.0, 0.0), tau2)
    }
}

/// Half-integer characteristic `[a; b]`, stored as twice its entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThetaCharacteristic {
    a: [u8; 2],
    b: [u8; 2],
}

impl ThetaCharacteristic {
    /// Entries are `0` or `1`, standing for `0` and `1/2`.
    pub const fn new(a: [u8; 2], b: [u8; 2]) -> Self {
        assert!(a[0] < 2 && a[1] < 2 && b[0] < 2 && b[1] < 2);
        ThetaCharacteristic { a, b }
    }

    pub fn try_new(a: [u8; 2], b: [u8; 2]) -> Result<Self> {
        if a.iter().chain(b.iter()).any(|&v| v > 1) {
            return Err(Error::domain("characteristic entries must be 0 or 1/2"));
        }
        Ok(ThetaCharacteristic { a, b })
    }

    pub fn a(&self) -> [f64; 2] {
        [self.a[0] as f64 / 2.0, self.a[1] as f64 / 2.0]
    }

    pub fn b(&self) -> [f64; 2] {
        [self.b[0] as f64 / 2.0, self.b[1] as f64 / 2.0]
    }

    /// `(-1)^{4 a.b}`.
    pub fn parity(&self) -> i32 {
        if (self.a[0] * self.b[0] + self.a[1] * self.b[1]).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 1
    }
}

const fn ch(a0: u8, a1: u8, b0: u8, b1: u8) -> ThetaCharacteristic {
    ThetaCharacteristic::new([a0, a1], [b0, b1])
}

/// The ten even characteristics in the fixed order `theta_1 .. theta_10`.
pub const EVEN_CHARACTERISTICS: [ThetaCharacteristic; 10] = [
    ch(0, 0, 0, 0),
    ch(0, 0, 1, 1),
    ch(0, 0, 1, 0),
    ch(0, 0, 0, 1),
    ch(1, 0, 0, 0),
    ch(1, 0, 0, 1),
    ch(0, 1, 0, 0),
    ch(1, 1, 0, 0),
    ch(0, 1, 1, 0),
    ch(1, 1, 1, 1),
];

pub const ODD_CHARACTERISTICS: [ThetaCharacteristic; 6] = [
    ch(0, 1, 0, 1),
    ch(0, 1, 1, 1),
    ch(1, 0, 1, 0),
    ch(1, 1, 1, 0),
    ch(1, 0, 1, 1),
    ch(1, 1, 0, 1),
];

/// A truncated theta series together with the size of its outermost shell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaValue {
    pub value: Complex,
    /// Sum of the moduli of the terms on the outermost shell of the box.
    pub tail: f64,
    pub precision_warning: bool,
}

pub fn theta_constant(
    ch: ThetaCharacteristic,
    tau: &PeriodMatrix,
    radius: u32,
) -> Result<ThetaValue> {
    if radius == 0 {
        return Err(Error::domain("theta radius must be at least 1"));
    }
    let tau = PeriodMatrix::new(tau.tau1, tau.z, tau.tau2)?;
    let [a1, a2] = ch.a();
    let [b1, b2] = ch.b();
    let axis = |shift: f64| -> Vec<(f64, bool)> {
        let r = radius as i64;
        if shift == 0.0 {
            (-r..=r).map(|n| (n as f64, n.abs() == r)).collect()
        } else {
            (0..=r)
                .flat_map(|k| {
                    let v = k as f64 + 0.5;
                    [(v, k == r), (-v, k == r)]
                })
                .collect()
        }
    };
    let xs = axis(a1);
    let ys = axis(a2);
    let i_pi = Complex::new(0.0, PI);
    let mut value = Complex::new(0.0, 0.0);
    let mut tail = 0.0;
    for &(v1, edge1) in &xs {
        for &(v2, edge2) in &ys {
            let q = tau.tau1 * (v1 * v1) + tau.z * (2.0 * v1 * v2) + tau.tau2 * (v2 * v2);
            let phase = Complex::new(0.0, 2.0 * (v1 * b1 + v2 * b2));
            let term = (i_pi * q + phase * PI).exp();
            value += term;
            if edge1 || edge2 {
                tail += term.norm();
            }
        }
    }
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::domain("theta series overflowed"));
    }
    Ok(ThetaValue {
        value,
        tail,
        precision_warning: tail > TAIL_WARNING * value.norm(),
    })
}

/// The ten even theta constants `theta_1 .. theta_10` at `z = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaConstants {
    pub theta: [Complex; 10],
    pub max_tail: f64,
    pub precision_warning: bool,
}

impl ThetaConstants {
    pub fn from_values(theta: [Complex; 10]) -> Self {
        ThetaConstants {
            theta,
            max_tail: 0.0,
            precision_warning: false,
        }
    }

    pub fn squares(&self) -> [Complex; 10] {
        self.theta.map(|t| t * t)
    }

    pub fn fourth_powers(&self) -> [Complex; 10] {
        self.theta.map(|t| (t * t) * (t * t))
    }
}

pub fn even_theta_constants(tau: &PeriodMatrix, radius: u32) -> Result<ThetaConstants> {
    let mut theta = [Complex::new(0.0, 0.0); 10];
    let mut max_tail: f64 = 0.0;
    let mut warn = false;
    for (slot, ch) in theta.iter_mut().zip(EVEN_CHARACTERISTICS) {
        let v = theta_constant(ch, tau, radius)?;
        *slot = v.value;
        max_tail = max_tail.max(v.tail);
        warn |= v.precision_warning;
    }
    Ok(ThetaConstants {
        theta,
        max_tail,
        precision_warning: warn,
    })
}

/// Residuals of the Frobenius identities and of the reductions of the ten
/// fourth powers to the basis `theta_1^4 .. theta_5^4`.
///
/// Each residual is `|lhs - rhs|` divided by the largest modulus among the
/// terms of that identity, so it is invariant under rescaling the constants.
#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusReport {
    pub identities: [f64; 8],
    pub reductions: [f64; 5],
    pub tol: f64,
}

impl FrobeniusReport {
    pub fn max_residual(&self) -> f64 {
        self.identities
            .iter()
            .chain(self.reductions.iter())
            .cloned()
            .fold(0.0, f64::max)
    }

    pub fn passes(&self) -> bool {
        self.max_residual() <= self.tol
    }
}

fn residual(lhs: &[Complex], rhs: &[Complex]) -> f64 {
    let l: Complex = lhs.iter().sum();
    let r: Complex = rhs.iter().sum();
    let scale = lhs
        .iter()
        .chain(rhs.iter())
        .map(|c| c.norm())
        .fold(0.0, f64::max);
    if scale == 0.0 {
        0.0
    } else {
        (l - r).norm() / scale
    }
}

pub fn check_frobenius(tc: &ThetaConstants, tol: f64) -> FrobeniusReport {
    let s = tc.squares();
    let f = tc.fourth_powers();
    let t = |i: usize| s[i - 1];
    let q = |i: usize| f[i - 1];
    let identities = [
        residual(&[t(5) * t(6)], &[t(1) * t(4), -t(2) * t(3)]),
        residual(&[q(5), q(6)], &[q(1), -q(2), -q(3), q(4)]),
        residual(&[t(7) * t(9)], &[t(1) * t(3), -t(2) * t(4)]),
        residual(&[q(7), q(9)], &[q(1), -q(2), q(3), -q(4)]),
        residual(&[t(8) * t(10)], &[t(1) * t(2), -t(3) * t(4)]),
        residual(&[q(8), q(10)], &[q(1), q(2), -q(3), -q(4)]),
        residual(&[t(5) * t(9)], &[t(3) * t(8), -t(4) * t(10)]),
        residual(&[t(5) * t(7)], &[t(1) * t(8), -t(2) * t(10)]),
    ];
    let reductions = [
        residual(&[q(6)], &[q(1), -q(2), -q(3), q(4), -q(5)]),
        residual(&[q(7)], &[q(3), -q(4), q(5)]),
        residual(&[q(8)], &[q(2), -q(4), q(5)]),
        residual(&[q(9)], &[q(1), -q(2), -q(5)]),
        residual(&[q(10)], &[q(1), -q(3), -q(5)]),
    ];
    FrobeniusReport {
        identities,
        reductions,
        tol,
    }
}

/// Completes `theta_1^4 .. theta_5^4` to all ten fourth powers.
pub fn reduce_fourth_powers<T: Scalar>(b: &[T; 5]) -> [T; 10] {
    let [t1, t2, t3, t4, t5] = b.clone();
    [
        t1.clone(),
        t2.clone(),
        t3.clone(),
        t4.clone(),
        t5.clone(),
        t1.clone() - t2.clone() - t3.clone() + t4.clone() - t5.clone(),
        t3.clone() - t4.clone() + t5.clone(),
        t2.clone() - t4 + t5.clone(),
        t1.clone() - t2 - t5.clone(),
        t1 - t3 - t5,
    ]
}

/// Level-two Satake coordinates `x_1 .. x_6`.
#[derive(Debug, Clone, PartialEq)]
pub struct SatakeCoordinates<T = Complex> {
    pub x: [T; 6],
}

impl<T: Scalar> SatakeCoordinates<T> {
    pub fn sum(&self) -> T {
        self.x.iter().cloned().fold(T::zero(), |a, b| a + b)
    }

    /// `s_j = sum_i x_i^j`.
    pub fn power_sum(&self, j: u32) -> T {
        self.x.iter().fold(T::zero(), |a, b| a + b.ipow(j))
    }

    /// `|s_2^2 - 4 s_4| / |s_2|^2`, the distance from the Igusa quartic.
    pub fn quartic_defect(&self) -> f64 {
        let s2 = self.power_sum(2);
        let s4 = self.power_sum(4);
        let d = (s2.clone() * s2.clone() - T::from_i64(4) * s4).magnitude();
        let n = s2.magnitude();
        if n == 0.0 {
            d
        } else {
            d / (n * n)
        }
    }
}

/// The six linear forms in `theta_1^4 .. theta_5^4`.
pub fn satake_from_theta4<T: Scalar>(t4: &[T; 10]) -> SatakeCoordinates<T> {
    let c = |k: [i64; 5]| {
        k.iter()
            .zip(t4.iter())
            .fold(T::zero(), |acc, (&k, t)| acc + T::from_i64(k) * t.clone())
    };
    SatakeCoordinates {
        x: [
            c([-1, 2, 2, -1, 3]),
            c([-1, 2, -1, -1, 0]),
            c([-1, -1, -1, 2, 0]),
            c([2, -1, -1, -1, 0]),
            c([-1, -1, 2, -1, 0]),
            c([2, -1, -1, 2, -3]),
        ],
    }
}

pub fn satake_from_theta(tc: &ThetaConstants) -> SatakeCoordinates {
    satake_from_theta4(&tc.fourth_powers())
}

/// Inverse of [`satake_from_theta4`]: the ten fourth powers as signed thirds
/// of triple sums of Satake coordinates.
pub fn theta4_from_satake<T: Scalar>(s: &SatakeCoordinates<T>) -> [T; 10] {
    let x = &s.x;
    let third = |sign: i64, i: usize, j: usize, k: usize| {
        (x[i - 1].clone() + x[j - 1].clone() + x[k - 1].clone()) * T::from_frac(sign, 3)
    };
    [
        third(-1, 2, 3, 5),
        third(-1, 3, 4, 5),
        third(-1, 2, 3, 4),
        third(-1, 2, 4, 5),
        third(1, 1, 3, 4),
        third(-1, 1, 2, 5),
        third(1, 1, 4, 5),
        third(1, 1, 2, 4),
        third(-1, 1, 2, 3),
        third(-1, 1, 3, 5),
    ]
}

fn denominator_ok<T: Scalar>(d: &T, scale: f64) -> bool {
    let m = d.magnitude();
    m.is_finite() && m > 1e-12 * scale
}

fn check_rosenhain<T: Scalar>(l: [T; 3], scale: f64) -> Result<[T; 3]> {
    let near = |a: &T, b: &T| !denominator_ok(&(a.clone() - b.clone()), scale.max(1.0));
    let zero = T::zero();
    let one = T::one();
    for i in 0..3 {
        if near(&l[i], &zero) || near(&l[i], &one) {
            return Err(Error::DegeneratePoint(format!(
                "Rosenhain root {} collides with 0 or 1",
                i + 1
            )));
        }
        for j in (i + 1)..3 {
            if near(&l[i], &l[j]) {
                return Err(Error::DegeneratePoint(format!(
                    "Rosenhain roots {} and {} collide",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(l)
}

/// Rosenhain roots as ratios of squared theta constants:
/// `(t1 t3 / t2 t4, t3 t8 / t4 t10, t1 t8 / t2 t10)` with `t_i = theta_i^2`.
pub fn rosenhain_from_theta(tc: &ThetaConstants) -> Result<[Complex; 3]> {
    let s = tc.squares();
    let t = |i: usize| s[i - 1];
    let scale = s.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let dens = [t(2) * t(4), t(4) * t(10), t(2) * t(10)];
    for (k, d) in dens.iter().enumerate() {
        if !denominator_ok(d, scale * scale) {
            return Err(Error::DegeneratePoint(format!(
                "denominator of Rosenhain root {} vanishes (chi10 = 0)",
                k + 1
            )));
        }
    }
    let l = [
        t(1) * t(3) / dens[0],
        t(3) * t(8) / dens[1],
        t(1) * t(8) / dens[2],
    ];
    check_rosenhain(l, 1.0)
}

/// Rosenhain roots from fourth powers only, free of square-root branches.
pub fn rosenhain_from_theta4<T: Scalar>(t4: &[T; 10]) -> Result<[T; 3]> {
    let t = |i: usize| t4[i - 1].clone();
    let scale = t4.iter().map(|c| c.magnitude()).fold(0.0, f64::max);
    let dens = [t(2) * t(4), t(4) * t(10), t(2) * t(10)];
    for (k, d) in dens.iter().enumerate() {
        if !denominator_ok(d, scale * scale) {
            return Err(Error::DegeneratePoint(format!(
                "fourth-power denominator of Rosenhain root {} vanishes",
                k + 1
            )));
        }
    }
    let half = T::from_frac(1, 2);
    let two = T::from_i64(2);
    let nums = [
        t(1) * t(3) - t(7) * t(9),
        t(3) * t(8) - t(5) * t(9),
        t(1) * t(8) - t(5) * t(7),
    ];
    let [n1, n2, n3] = nums;
    let [d1, d2, d3] = dens;
    Ok([
        half.clone() + n1 / (two.clone() * d1),
        half.clone() + n2 / (two.clone() * d2),
        half + n3 / (two * d3),
    ])
}
