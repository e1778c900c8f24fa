use super::poly::Polynomial;
use super::scalar::Complex;
use crate::error::{Error, Result};

/// Default relative residual tolerance for [`complex_roots`].
pub const DEFAULT_ROOT_TOL: f64 = 1e-10;

/// Iteration cap for the simultaneous iteration.
pub const DEFAULT_MAX_ITER: usize = 500;

#[derive(Debug, Clone, Copy)]
pub struct RootOptions {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions {
            tol: DEFAULT_ROOT_TOL,
            max_iter: DEFAULT_MAX_ITER,
        }
    }
}

/// All roots of `p`, with multiplicity, by Aberth-Ehrlich iteration followed by
/// a Newton polish.
///
/// Every returned root satisfies `|p(r)| <= tol * sum |a_i| |r|^i`; the scale on
/// the right is the size of the terms being cancelled, which is the quantity
/// binary64 evaluation can resolve. If any root misses the bound after
/// `max_iter` sweeps, [`Error::NoConvergence`] carries the residuals.
pub fn complex_roots(p: &Polynomial<Complex>, opts: RootOptions) -> Result<Vec<Complex>> {
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::domain("root finding needs degree at least 1")),
    };
    let coeffs = p.coeffs();
    if coeffs
        .iter()
        .any(|c| !c.re.is_finite() || !c.im.is_finite())
    {
        return Err(Error::domain("non-finite polynomial coefficient"));
    }
    let lead = coeffs[n];
    if lead.norm() == 0.0 {
        return Err(Error::domain("leading coefficient vanishes"));
    }
    let monic: Vec<Complex> = coeffs.iter().map(|c| c / lead).collect();
    let dmonic: Vec<Complex> = (1..=n).map(|i| monic[i] * i as f64).collect();

    // Initial guesses on a circle of Fujiwara radius, rotated off the axes.
    let radius = (0..n)
        .map(|i| monic[i].norm().powf(1.0 / (n - i) as f64))
        .fold(0.0, f64::max)
        .max(1e-3)
        * 2.0;
    let mut z: Vec<Complex> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex::from_polar(radius, theta)
        })
        .collect();

    let eval = |c: &[Complex], x: Complex| {
        c.iter()
            .rev()
            .fold(Complex::new(0.0, 0.0), |a, b| a * x + b)
    };

    let mut converged = false;
    for _ in 0..opts.max_iter {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let pv = eval(&monic, z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / eval(&dmonic, z[i]);
            let mut s = Complex::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 0.0 {
                        s += d.inv();
                    }
                }
            }
            let step = ratio / (Complex::new(1.0, 0.0) - ratio * s);
            if step.re.is_finite() && step.im.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            converged = true;
            break;
        }
    }

    for r in z.iter_mut() {
        for _ in 0..3 {
            let d = eval(&dmonic, *r);
            if d.norm() == 0.0 {
                break;
            }
            let next = *r - eval(&monic, *r) / d;
            if eval(&monic, next).norm() < eval(&monic, *r).norm() {
                *r = next;
            } else {
                break;
            }
        }
    }

    let residuals: Vec<f64> = z
        .iter()
        .map(|r| {
            let scale: f64 = coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.norm() * r.norm().powi(i as i32))
                .sum();
            eval(coeffs, *r).norm() / scale.max(f64::MIN_POSITIVE)
        })
        .collect();
    let worst = residuals.iter().cloned().fold(0.0, f64::max);
    if worst > opts.tol || !worst.is_finite() {
        return Err(Error::NoConvergence {
            iterations: if converged { 0 } else { opts.max_iter },
            worst,
            residuals,
        });
    }
    Ok(z)
}
