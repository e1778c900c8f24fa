use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{complex_roots, to_complex, Complex, Polynomial, Rational, RootOptions};
use crate::invariants::{absolute_invariants, igusa_from_rosenhain, AbsoluteInvariants};
use crate::thetafn::{rosenhain_from_theta4, theta4_from_satake, SatakeCoordinates};

use super::{power_sums_from_igusa, satake_sextic, PowerSums};

/// Picard denominators below this fraction of `max |x_i|^2` make an ordering
/// unusable.
pub const ORDERING_THRESHOLD: f64 = 1e-6;

/// Rosenhain roots from Satake coordinates taken in the given order: fourth
/// powers of theta constants by the inverse linear map, then the
/// branch-free Picard ratios.
pub fn reconstruct_from_satake_roots(
    x: &[Complex; 6],
    ordering: [usize; 6],
) -> Result<[Complex; 3]> {
    let mut seen = [false; 6];
    for &i in &ordering {
        if i >= 6 || seen[i] {
            return Err(Error::domain("ordering must be a permutation of 0..6"));
        }
        seen[i] = true;
    }
    let scale = x.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(Error::DegeneratePoint(
            "all Satake coordinates vanish".into(),
        ));
    }
    let sum: Complex = x.iter().sum();
    if sum.norm() > 1e-8 * scale {
        return Err(Error::domain(format!(
            "Satake coordinates do not sum to zero (|sum| = {:e})",
            sum.norm()
        )));
    }
    let labelled = SatakeCoordinates {
        x: ordering.map(|i| x[i]),
    };
    let t4 = theta4_from_satake(&labelled);
    let t = |i: usize| t4[i - 1];
    let dens = [t(2) * t(4), t(4) * t(10), t(2) * t(10)];
    let floor = ORDERING_THRESHOLD * scale * scale;
    if dens.iter().any(|d| d.norm() <= floor) {
        return Err(Error::SingularOrdering { ordering });
    }
    rosenhain_from_theta4(&t4).map_err(|_| Error::SingularOrdering { ordering })
}

fn next_permutation(p: &mut [usize; 6]) -> bool {
    let Some(i) = (0..5).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..6)
        .rev()
        .find(|&j| p[j] > p[i])
        .expect("pivot exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Tries orderings in lexicographic order starting from the identity and
/// returns the first one whose Picard denominators are usable.
pub fn reconstruct_auto(x: &[Complex; 6]) -> Result<([usize; 6], [Complex; 3])> {
    let mut ordering = [0, 1, 2, 3, 4, 5];
    loop {
        match reconstruct_from_satake_roots(x, ordering) {
            Ok(l) => return Ok((ordering, l)),
            Err(Error::SingularOrdering { .. }) => {}
            Err(e) => return Err(e),
        }
        if !next_permutation(&mut ordering) {
            return Err(Error::DegeneratePoint(
                "no ordering of the Satake roots has nonvanishing Picard denominators".into(),
            ));
        }
    }
}

/// Smallest distance between two of `0, 1, l1, l2, l3`, relative to the
/// largest of their moduli (at least 1). Small values mean the branch points
/// nearly collide and the invariants lose precision.
fn spread(l: &[Complex; 3]) -> f64 {
    let pts = [
        Complex::new(0.0, 0.0),
        Complex::new(1.0, 0.0),
        l[0],
        l[1],
        l[2],
    ];
    let m = pts.iter().map(|v| v.norm()).fold(1.0, f64::max);
    let mut best = f64::INFINITY;
    for i in 0..5 {
        for j in i + 1..5 {
            best = best.min((pts[i] - pts[j]).norm() / m);
        }
    }
    best
}

/// Scans all usable orderings and keeps the one whose Rosenhain roots are
/// best separated; ties go to the lexicographically first ordering.
pub fn reconstruct_best(x: &[Complex; 6]) -> Result<([usize; 6], [Complex; 3])> {
    let mut ordering = [0, 1, 2, 3, 4, 5];
    let mut best: Option<(f64, [usize; 6], [Complex; 3])> = None;
    loop {
        match reconstruct_from_satake_roots(x, ordering) {
            Ok(l) => {
                let s = spread(&l);
                if s.is_finite() && best.as_ref().is_none_or(|b| s > b.0) {
                    best = Some((s, ordering, l));
                }
            }
            Err(Error::SingularOrdering { .. }) => {}
            Err(e) => return Err(e),
        }
        if !next_permutation(&mut ordering) {
            break;
        }
    }
    best.map(|(_, o, l)| (o, l)).ok_or_else(|| {
        Error::DegeneratePoint(
            "no ordering of the Satake roots has nonvanishing Picard denominators".into(),
        )
    })
}

/// Numeric roots of a rational sextic.
pub fn satake_roots(f: &Polynomial<Rational>) -> Result<[Complex; 6]> {
    if f.degree() != Some(6) {
        return Err(Error::domain("Satake sextic must have degree 6"));
    }
    let roots = complex_roots(&f.map(to_complex), RootOptions::default())?;
    Ok(std::array::from_fn(|i| polish_exact(f, roots[i])))
}

/// Newton steps with `f(z)` and `f'(z)` evaluated exactly at the binary64
/// value of `z`. Clustered roots of large sextics lose digits to rounding in
/// a floating-point Horner scheme; this recovers them.
fn polish_exact(f: &Polynomial<Rational>, mut z: Complex) -> Complex {
    for _ in 0..3 {
        let (Some(re), Some(im)) = (Rational::from_float(z.re), Rational::from_float(z.im)) else {
            return z;
        };
        // Horner for f and f' over Q(i), as (re, im) pairs
        let zero = || (Rational::zero(), Rational::zero());
        let (mut v, mut d) = (zero(), zero());
        for k in (0..=6).rev() {
            d = (
                &d.0 * &re - &d.1 * &im + &v.0,
                &d.0 * &im + &d.1 * &re + &v.1,
            );
            v = (
                &v.0 * &re - &v.1 * &im + f.coeff(k),
                &v.0 * &im + &v.1 * &re,
            );
        }
        let fz = Complex::new(to_complex(&v.0).re, to_complex(&v.1).re);
        let dz = Complex::new(to_complex(&d.0).re, to_complex(&d.1).re);
        let step = fz / dz;
        if !step.re.is_finite() || !step.im.is_finite() {
            return z;
        }
        z -= step;
        if step.norm() <= f64::EPSILON * z.norm() {
            break;
        }
    }
    z
}

/// Outcome of curve -> Satake sextic -> numeric roots -> Rosenhain curve.
#[derive(Debug, Clone, PartialEq)]
pub struct RoundTrip {
    pub original: AbsoluteInvariants,
    pub roots: [Complex; 6],
    pub ordering: [usize; 6],
    pub lambda: [Complex; 3],
    pub reconstructed: AbsoluteInvariants<Complex>,
    pub max_rel_err: f64,
}

pub fn roundtrip(lambda: &[Rational; 3]) -> Result<RoundTrip> {
    let inv = igusa_from_rosenhain(lambda);
    let original = absolute_invariants(&inv)?;
    let f = satake_sextic(&power_sums_from_igusa(&inv))?;
    let roots = satake_roots(&f)?;
    let (ordering, lam) = reconstruct_best(&roots)?;
    let reconstructed = absolute_invariants(&igusa_from_rosenhain(&lam))?;
    let orig_c = AbsoluteInvariants {
        j1: to_complex(&original.j1),
        j2: to_complex(&original.j2),
        j3: to_complex(&original.j3),
    };
    let max_rel_err = orig_c
        .as_array()
        .iter()
        .zip(reconstructed.as_array().iter())
        .map(|(a, b)| (a - b).norm() / a.norm().max(f64::MIN_POSITIVE))
        .fold(0.0, f64::max);
    Ok(RoundTrip {
        original,
        roots,
        ordering,
        lambda: lam,
        reconstructed,
        max_rel_err,
    })
}

/// Fit of `s_j(target) = (r^2)^j s_j(source)` for `j = 2, 3, 5, 6`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSumRescaling {
    pub r2: Complex,
    /// Relative mismatch for `s3`, `s5`, `s6` after fitting.
    pub residuals: [f64; 3],
}

impl PowerSumRescaling {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().cloned().fold(0.0, f64::max)
    }
}

/// Solves `r^4` from the `s2` ratio, picks the square root matching the `s3`
/// ratio, and reports how well `s3, s5, s6` follow.
pub fn fit_power_sum_rescaling(
    source: &PowerSums<Complex>,
    target: &PowerSums<Complex>,
) -> Result<PowerSumRescaling> {
    let ratio = |j: usize| {
        let d = source.get(j);
        if d.norm() == 0.0 {
            Err(Error::DegeneratePoint(format!("s{j} vanishes")))
        } else {
            Ok(target.get(j) / d)
        }
    };
    let r4 = ratio(2)?;
    let r6 = ratio(3)?;
    let root = r4.sqrt();
    let cands = [root, -root];
    let r2 = *cands
        .iter()
        .min_by(|a, b| {
            let ea = (a.powu(3) - r6).norm();
            let eb = (b.powu(3) - r6).norm();
            ea.partial_cmp(&eb).unwrap()
        })
        .expect("two candidates");
    let rel = |j: usize, e: u32| {
        let want = target.get(j);
        let got = source.get(j) * r2.powu(e);
        (want - got).norm() / want.norm().max(got.norm()).max(f64::MIN_POSITIVE)
    };
    Ok(PowerSumRescaling {
        r2,
        residuals: [rel(3, 3), rel(5, 5), rel(6, 6)],
    })
}
