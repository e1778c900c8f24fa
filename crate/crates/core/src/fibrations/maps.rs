//! Fiberwise maps between the alternate and KumFib2 models, the Nikulin
//! involution, and the birational change between standard and alternate
//! coordinates.

use num_traits::Zero;

use super::{alternate_model, kumfib2_from_params, FibrationParams, WeierstrassModel};
use crate::error::{Error, Result};
use crate::exactmath::{Polynomial, Rational, Ring};

#[derive(Debug, Clone, PartialEq)]
pub enum CurvePoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl CurvePoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        CurvePoint::Affine { x, y }
    }
}

fn on_curve(m: &WeierstrassModel, t: &Rational, pt: &CurvePoint) -> bool {
    match pt {
        CurvePoint::Infinity => true,
        CurvePoint::Affine { x, y } => y * y == m.rhs(t, x),
    }
}

fn require_on(m: &WeierstrassModel, t: &Rational, pt: &CurvePoint, which: &str) -> Result<()> {
    if on_curve(m, t, pt) {
        Ok(())
    } else {
        Err(Error::domain(format!("point is not on the {which} fiber")))
    }
}

fn ensure_on(m: &WeierstrassModel, t: &Rational, pt: &CurvePoint, which: &str) -> Result<()> {
    if on_curve(m, t, pt) {
        Ok(())
    } else {
        Err(Error::violation(format!(
            "image is not on the {which} fiber"
        )))
    }
}

/// `(x, y) -> (y^2/x^2, y (E - x^2)/x^2)` from the alternate fiber to the
/// KumFib2 fiber; the two-torsion point `(0, 0)` goes to infinity.
pub fn isogeny(pt: &CurvePoint, t: &Rational, p: &FibrationParams) -> Result<CurvePoint> {
    require_on(&alternate_model(p), t, pt, "alternate")?;
    let (x, y) = match pt {
        CurvePoint::Affine { x, y } if !x.is_zero() => (x, y),
        _ => return Ok(CurvePoint::Infinity),
    };
    let e = p.e_poly().eval(t);
    let x2 = x * x;
    let image = CurvePoint::affine(y * y / &x2, y * (e - &x2) / &x2);
    ensure_on(&kumfib2_from_params(p), t, &image, "KumFib2")?;
    Ok(image)
}

/// `(X, Y) -> (Y^2/(4 X^2), Y (P^2 - 4E - X^2)/(8 X^2))` back to the
/// alternate fiber; `(0, 0)` goes to infinity.
pub fn dual_isogeny(pt: &CurvePoint, t: &Rational, p: &FibrationParams) -> Result<CurvePoint> {
    require_on(&kumfib2_from_params(p), t, pt, "KumFib2")?;
    let (x, y) = match pt {
        CurvePoint::Affine { x, y } if !x.is_zero() => (x, y),
        _ => return Ok(CurvePoint::Infinity),
    };
    let r = p.radicand().eval(t);
    let x2 = x * x;
    let image = CurvePoint::affine(
        y * y / (Rational::from_i64(4) * &x2),
        y * (r - &x2) / (Rational::from_i64(8) * &x2),
    );
    ensure_on(&alternate_model(p), t, &image, "alternate")?;
    Ok(image)
}

/// Translation by the two-torsion section `(0, 0)` of the alternate fiber:
/// `(x, y) -> (E/x, -y E/x^2)`.
pub fn nikulin_involution(
    pt: &CurvePoint,
    t: &Rational,
    p: &FibrationParams,
) -> Result<CurvePoint> {
    let m = alternate_model(p);
    require_on(&m, t, pt, "alternate")?;
    let e = p.e_poly().eval(t);
    let image = match pt {
        CurvePoint::Infinity => CurvePoint::affine(Rational::from_i64(0), Rational::from_i64(0)),
        CurvePoint::Affine { x, .. } if x.is_zero() => CurvePoint::Infinity,
        CurvePoint::Affine { x, y } => CurvePoint::affine(&e / x, -(y * &e) / (x * x)),
    };
    ensure_on(&m, t, &image, "alternate")?;
    Ok(image)
}

/// Base locus of the fixed points off `x = 0`: eliminating `x` from
/// `x^2 = E` and `y = 0` on the curve. On the curve with `y = 0` and `x != 0`,
/// `x^2 + P x + E = 0`, so `x = -2E/P`; then `x^2 - E = -E (P^2 - 4E)/P^2`.
pub fn nikulin_fixed_locus(p: &FibrationParams) -> Result<Polynomial<Rational>> {
    let e = p.e_poly();
    let pp = p.p_poly();
    let four = Polynomial::constant(Rational::from_i64(4));
    // numerator of x^2 - E at x = -2E/P
    let numer = &(&four * &e) * &e - &(&e * &pp) * &pp;
    if e.is_zero() {
        return Err(Error::domain("E vanishes identically"));
    }
    numer.div_exact(&-e)
}

/// `(t, x, y)` on the alternate model to standard coordinates
/// `(x/e, t x^2/e^2, -x^2 y/e^3)`.
pub fn standard_from_alternate(
    t: &Rational,
    x: &Rational,
    y: &Rational,
    p: &FibrationParams,
) -> Result<(Rational, Rational, Rational)> {
    if p.e.is_zero() {
        return Err(Error::domain("transform needs e != 0"));
    }
    let e = &p.e;
    let x2 = x * x;
    Ok((x / e, t * &x2 / (e * e), -(&x2 * y) / (e * e * e)))
}

/// Inverse of [`standard_from_alternate`]: `x = e ts`, `t = xs/ts^2`,
/// `y = -e ys/ts^2`.
pub fn alternate_from_standard(
    ts: &Rational,
    xs: &Rational,
    ys: &Rational,
    p: &FibrationParams,
) -> Result<(Rational, Rational, Rational)> {
    if p.e.is_zero() || ts.is_zero() {
        return Err(Error::domain("inverse transform needs e != 0 and t != 0"));
    }
    let t2 = ts * ts;
    Ok((xs / &t2, &p.e * ts, -(&p.e * ys) / &t2))
}

type R3 = Polynomial<Polynomial<Polynomial<Rational>>>;

fn c3(r: Rational) -> R3 {
    Polynomial::constant(Polynomial::constant(Polynomial::constant(r)))
}

/// Checks `e^6 S(x/e, t x^2/e^2, -x^2 y/e^3) = x^4 A(t, x, y)` in
/// `Q[t][x][y]`, where `S` and `A` are the standard and alternate equations
/// `y^2 - rhs`.
pub fn transform_identity(p: &FibrationParams) -> Result<()> {
    if p.e.is_zero() {
        return Err(Error::domain("transform needs e != 0"));
    }
    let t: R3 = Polynomial::constant(Polynomial::constant(Polynomial::x()));
    let x: R3 = Polynomial::constant(Polynomial::x());
    let y: R3 = Polynomial::x();
    let [a, b, c, d, e] = p.as_array().map(c3);
    let inv_e = c3(Rational::from_i64(1) / &p.e);

    let ts = &x * &inv_e;
    let xs = &(&t * &(&x * &x)) * &inv_e.ipow(2);
    let ys = -(&(&(&x * &x) * &y) * &inv_e.ipow(3));
    let standard = ys.ipow(2)
        - xs.ipow(3)
        - ts.ipow(3) * (a.clone() * ts.clone() + c.clone()) * xs
        - ts.ipow(5) * (e.clone() * ts.ipow(2) + b.clone() * ts.clone() + d.clone());

    let pp = t.ipow(3) + a * t.clone() + b;
    let ee = e.clone() * (c * t + d);
    let alternate = y.ipow(2) - x.ipow(3) - pp * x.ipow(2) - ee * x.clone();

    if e.ipow(6) * standard != x.ipow(4) * alternate {
        return Err(Error::violation(
            "standard equation does not pull back to x^4 times the alternate one",
        ));
    }
    Ok(())
}
