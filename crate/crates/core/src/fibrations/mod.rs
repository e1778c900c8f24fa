//! Jacobian elliptic fibrations over `P^1_t` attached to a genus-two curve,
//! their singular fibers, and the maps between them.
//!
//! Models are `y^2 = x^3 + A(t) x^2 + B(t) x + C(t)`. The short form is
//! `Y^2 = 4 X^3 - g2 X - g3` with `x = X - A/3`, `y = Y/2`, so
//! `g2 = 4 (A^2/3 - B)`, `g3 = 4 (A B/3 - C) - 8 A^3/27`, and
//! `disc = g2^3 - 27 g3^2` is 16 times the discriminant of the cubic in `x`.

mod degenerations;
mod kodaira;
mod kummer;
mod maps;
mod tables;

pub use degenerations::{
    degeneration_flags, degeneration_flags_siegel, su2_bracket, su2_bracket_identity,
    type_iii_identity, type_iii_polynomial, type_iii_siegel, DegenerationFlags, SU2_DISC_FACTOR,
};
pub use kodaira::{
    classify_fibers, classify_fibers_numeric, kodaira_type, FiberCensus, FiberLocation,
    KodairaFiber, KodairaType, VanishingOrders,
};
pub use kummer::{kummer_quartic_model, sextic_recovery_limit, Bivariate, QuarticModel};
pub use maps::{
    alternate_from_standard, dual_isogeny, isogeny, nikulin_fixed_locus, nikulin_involution,
    standard_from_alternate, transform_identity, CurvePoint,
};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{Polynomial, Rational, Ring, Scalar};
use crate::invariants::{igusa_from_siegel, IgusaInvariants, SiegelForms};
use crate::satake::{power_sums_from_igusa, satake_sextic};

#[derive(Debug, Clone, PartialEq)]
pub struct WeierstrassModel<T = Rational> {
    pub a: Polynomial<T>,
    pub b: Polynomial<T>,
    pub c: Polynomial<T>,
    /// `1` for rational elliptic surfaces, `2` for K3 surfaces: the fiber at
    /// infinity is read with `g2, g3, disc` homogenized to degrees
    /// `4h, 6h, 12h`.
    pub height: u32,
}

impl<T: Scalar> WeierstrassModel<T> {
    pub fn new(a: Polynomial<T>, b: Polynomial<T>, c: Polynomial<T>, height: u32) -> Self {
        WeierstrassModel { a, b, c, height }
    }

    /// `(g2, g3)` of `Y^2 = 4 X^3 - g2 X - g3`.
    pub fn short_form(&self) -> (Polynomial<T>, Polynomial<T>) {
        let k = |n: i64, d: i64| Polynomial::constant(T::from_frac(n, d));
        let a2 = &self.a * &self.a;
        let g2 = &k(4, 3) * &a2 - &k(4, 1) * &self.b;
        let g3 =
            &(&k(4, 3) * &self.a) * &self.b - &k(4, 1) * &self.c - &k(8, 27) * &(&a2 * &self.a);
        (g2, g3)
    }

    pub fn discriminant(&self) -> Polynomial<T> {
        let (g2, g3) = self.short_form();
        g2.pow(3) - Polynomial::constant(T::from_i64(27)) * g3.pow(2)
    }

    /// Right-hand side `x^3 + A x^2 + B x + C` over the fiber at `t`.
    pub fn rhs(&self, t: &T, x: &T) -> T {
        let x2 = x.clone() * x.clone();
        x2.clone() * x.clone() + self.a.eval(t) * x2 + self.b.eval(t) * x.clone() + self.c.eval(t)
    }
}

/// The parameters `a = -I4/12`, `b = (I2 I4 - 3 I6)/108`, `c = -1`,
/// `d = I2/24`, `e = I10/4`.
#[derive(Debug, Clone, PartialEq)]
pub struct FibrationParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
}

impl FibrationParams {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational, e: Rational) -> Self {
        FibrationParams { a, b, c, d, e }
    }

    pub fn from_igusa(inv: &IgusaInvariants) -> Self {
        let IgusaInvariants { i2, i4, i6, i10 } = inv;
        let k = Rational::from_i64;
        FibrationParams {
            a: -i4 / k(12),
            b: (i2 * i4 - k(3) * i6) / k(108),
            c: k(-1),
            d: i2 / k(24),
            e: i10 / k(4),
        }
    }

    /// Through the Igusa dictionary; undefined when `chi10 = 0`.
    pub fn from_siegel(s: &SiegelForms) -> Result<Self> {
        Ok(Self::from_igusa(&igusa_from_siegel(s)?))
    }

    pub fn as_array(&self) -> [Rational; 5] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.e.clone(),
        ]
    }

    /// `P = t^3 + a t + b`.
    pub fn p_poly(&self) -> Polynomial<Rational> {
        Polynomial::new(vec![
            self.b.clone(),
            self.a.clone(),
            Rational::from_i64(0),
            Rational::from_i64(1),
        ])
    }

    /// `E = e (c t + d)`.
    pub fn e_poly(&self) -> Polynomial<Rational> {
        Polynomial::new(vec![&self.e * &self.d, &self.e * &self.c])
    }

    /// `P^2 - 4 E`, whose roots carry the `I1` fibers of the alternate model.
    pub fn radicand(&self) -> Polynomial<Rational> {
        let p = self.p_poly();
        &p * &p - Polynomial::constant(Rational::from_i64(4)) * self.e_poly()
    }
}

/// `Y^2 = X^3 - 2 P X^2 + (P^2 - 4 E) X`.
pub fn kumfib2_model(inv: &IgusaInvariants) -> WeierstrassModel {
    kumfib2_from_params(&FibrationParams::from_igusa(inv))
}

pub fn kumfib2_from_params(p: &FibrationParams) -> WeierstrassModel {
    WeierstrassModel::new(
        Polynomial::constant(Rational::from_i64(-2)) * p.p_poly(),
        p.radicand(),
        Polynomial::zero(),
        2,
    )
}

/// `y^2 = x^3 + (t^3 + a t + b) x^2 + e (c t + d) x`.
pub fn alternate_model(p: &FibrationParams) -> WeierstrassModel {
    WeierstrassModel::new(p.p_poly(), p.e_poly(), Polynomial::zero(), 2)
}

/// `y^2 = x^3 + (t^3 - psi4/48 t - psi6/864) x^2 - (4 chi10 t - chi12) x`,
/// defined on the product locus as well.
pub fn alternate_model_ftheory(s: &SiegelForms) -> WeierstrassModel {
    let a = Polynomial::new(vec![
        -&s.psi6 / Rational::from_i64(864),
        -&s.psi4 / Rational::from_i64(48),
        Rational::from_i64(0),
        Rational::from_i64(1),
    ]);
    let b = Polynomial::new(vec![s.chi12.clone(), Rational::from_i64(-4) * &s.chi10]);
    WeierstrassModel::new(a, b, Polynomial::zero(), 2)
}

/// `y^2 = x^3 + t^3 (a t + c) x + t^5 (e t^2 + b t + d)`.
pub fn standard_model(p: &FibrationParams) -> WeierstrassModel {
    let z = || Rational::from_i64(0);
    let b = Polynomial::new(vec![z(), z(), z(), p.c.clone(), p.a.clone()]);
    let c = Polynomial::new(vec![
        z(),
        z(),
        z(),
        z(),
        z(),
        p.d.clone(),
        p.b.clone(),
        p.e.clone(),
    ]);
    WeierstrassModel::new(Polynomial::zero(), b, c, 2)
}

/// The three polynomials that must agree under `t = -x/3`.
#[derive(Debug, Clone, PartialEq)]
pub struct SatakePositions {
    /// The monic Satake sextic `f(x)`.
    pub sextic: Polynomial<Rational>,
    /// `729 B(-x/3)` for the `X`-coefficient `B` of the KumFib2 model.
    pub kumfib2: Polynomial<Rational>,
    /// `729 R(-x/3)` for the radicand `R` of the alternate discriminant.
    pub alternate: Polynomial<Rational>,
}

/// Checks that the `I2` positions of KumFib2 and the `I1` positions of the
/// alternate fibration are the Satake roots scaled by `-1/3`, and that the
/// alternate discriminant factors as `16 E^2 (P^2 - 4 E)`.
pub fn satake_positions(inv: &IgusaInvariants) -> Result<SatakePositions> {
    let p = FibrationParams::from_igusa(inv);
    let sextic = satake_sextic(&power_sums_from_igusa(inv))?;
    let k = |n: i64| Polynomial::constant(Rational::from_i64(n));
    let sub = Polynomial::new(vec![Rational::from_i64(0), Rational::from_frac(-1, 3)]);
    let kumfib2 = &k(729) * &kumfib2_from_params(&p).b.compose(&sub);

    let alt = alternate_model(&p);
    let e = p.e_poly();
    let disc = alt.discriminant();
    if disc.is_zero() {
        return Err(Error::NotACurve("alternate discriminant vanishes".into()));
    }
    let radicand = disc.div_exact(&(&k(16) * &(&e * &e)))?;
    if radicand != p.radicand() {
        return Err(Error::violation(
            "alternate discriminant is not 16 E^2 (P^2 - 4 E)",
        ));
    }
    let alternate = &k(729) * &radicand.compose(&sub);
    if kumfib2 != sextic || alternate != sextic {
        return Err(Error::violation(
            "fiber positions differ from the Satake sextic under t = -x/3",
        ));
    }
    Ok(SatakePositions {
        sextic,
        kumfib2,
        alternate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::invariants::{igusa_from_rosenhain, siegel_from_igusa};

    fn r(n: i64) -> Rational {
        rat(n, 1)
    }

    fn reference() -> IgusaInvariants {
        igusa_from_rosenhain(&[r(2), r(3), r(5)])
    }

    #[test]
    fn short_form_of_trivial_models() {
        let z = WeierstrassModel::<Rational>::new(
            Polynomial::zero(),
            Polynomial::zero(),
            Polynomial::zero(),
            1,
        );
        let (g2, g3) = z.short_form();
        assert!(g2.is_zero() && g3.is_zero());
        let m = WeierstrassModel::new(
            Polynomial::zero(),
            Polynomial::constant(r(1)),
            Polynomial::zero(),
            1,
        );
        assert_eq!(m.discriminant(), Polynomial::constant(r(-64)));
    }

    #[test]
    fn kumfib2_of_pure_i10() {
        let m = kumfib2_model(&IgusaInvariants::new(r(0), r(0), r(0), r(1)));
        assert_eq!(m.b, Polynomial::from_i64s(&[0, 1, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn alternate_short_form_degrees() {
        let m = alternate_model(&FibrationParams::from_igusa(&reference()));
        let (g2, g3) = m.short_form();
        assert!(g2.degree().unwrap() <= 8 && g3.degree().unwrap() <= 12);
    }

    #[test]
    fn rational_surface_example() {
        // y^2 = x^3 + t x + t
        let m = WeierstrassModel::new(
            Polynomial::zero(),
            Polynomial::from_i64s(&[0, 1]),
            Polynomial::from_i64s(&[0, 1]),
            1,
        );
        let c = classify_fibers(&m).unwrap();
        assert_eq!(c.euler_sum, 12);
        assert_eq!(c.fibers.len(), 3);
        assert_eq!(c.fibers[0].location, FiberLocation::Rational(rat(-27, 4)));
        assert_eq!(c.fibers[0].fiber_type, KodairaType::I(1));
        assert_eq!(c.fibers[1].location, FiberLocation::Rational(r(0)));
        assert_eq!(c.fibers[1].fiber_type, KodairaType::II);
        assert_eq!(c.fibers[2].fiber_type, KodairaType::IIIStar);
    }

    #[test]
    fn reference_censuses() {
        use KodairaType::*;
        let inv = reference();
        let p = FibrationParams::from_igusa(&inv);
        let c = classify_fibers(&kumfib2_model(&inv)).unwrap();
        assert!(
            c.is(&[(I(2), 6), (IStar(5), 1), (I(1), 1)]),
            "{}",
            c.summary()
        );
        let c = classify_fibers(&alternate_model(&p)).unwrap();
        assert!(
            c.is(&[(I(1), 6), (I(2), 1), (IStar(10), 1)]),
            "{}",
            c.summary()
        );
        let c = classify_fibers(&standard_model(&p)).unwrap();
        assert!(
            c.is(&[(I(1), 5), (IIIStar, 1), (IIStar, 1)]),
            "{}",
            c.summary()
        );
    }

    #[test]
    fn ftheory_on_product_locus() {
        let s = siegel_from_igusa(&reference());
        let s0 = SiegelForms::new(s.psi4, s.psi6, r(0), s.chi12);
        let c = classify_fibers(&alternate_model_ftheory(&s0)).unwrap();
        assert!(
            c.counts().contains_key(&KodairaType::IStar(12)),
            "{}",
            c.summary()
        );
    }

    #[test]
    fn standard_model_without_e_is_non_minimal() {
        let mut p = FibrationParams::from_igusa(&reference());
        p.e = r(0);
        assert!(matches!(
            classify_fibers(&standard_model(&p)),
            Err(Error::NonMinimal { .. })
        ));
    }

    #[test]
    fn positions_of_reference_curve() {
        satake_positions(&reference()).unwrap();
    }
}
