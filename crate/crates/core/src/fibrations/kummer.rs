//! The Kummer surface as the quartic fibration
//! `Y^2 = t (1 - X + t) prod (l_i^2 - l_i X + t)` and its Jacobian.

use num_traits::{One, Zero};

use super::WeierstrassModel;
use crate::error::Result;
use crate::exactmath::{laurent_limit, Laurent, Polynomial, Rational, Ring};
use crate::invariants::RosenhainCurve;

/// Polynomials in an outer variable with coefficients in `Q[inner]`.
pub type Bivariate = Polynomial<Polynomial<Rational>>;

/// `Y^2 = sum_i q_i(t) X^i` with `i <= 4`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarticModel {
    /// `q[i]` is the coefficient of `X^i`.
    pub q: [Polynomial<Rational>; 5],
}

pub fn kummer_quartic_model(curve: &RosenhainCurve) -> QuarticModel {
    // outer variable X, inner t
    let t: Bivariate = Polynomial::constant(Polynomial::x());
    let x: Bivariate = Polynomial::x();
    let one: Bivariate = Polynomial::one();
    let cst = |r: &Rational| -> Bivariate { Polynomial::constant(Polynomial::constant(r.clone())) };
    let mut prod = &t * &(&(&one - &x) + &t);
    for l in &curve.lambda {
        let factor = &(&cst(&(l * l)) - &(&cst(l) * &x)) + &t;
        prod = &prod * &factor;
    }
    QuarticModel {
        q: std::array::from_fn(|i| prod.coeff(i)),
    }
}

impl QuarticModel {
    /// Classical invariants of `a X^4 + b X^3 + c X^2 + d X + e`:
    /// `I = 12 a e - 3 b d + c^2`,
    /// `J = 72 a c e + 9 b c d - 27 a d^2 - 27 e b^2 - 2 c^3`.
    pub fn invariants(&self) -> (Polynomial<Rational>, Polynomial<Rational>) {
        let [e, d, c, b, a] = self.q.clone();
        let k = |n: i64| Polynomial::constant(Rational::from_i64(n));
        let i =
            k(12) * a.clone() * e.clone() - k(3) * b.clone() * d.clone() + c.clone() * c.clone();
        let j = k(72) * a.clone() * c.clone() * e.clone()
            + k(9) * b.clone() * c.clone() * d.clone()
            - k(27) * a * d.clone() * d
            - k(27) * e * b.clone() * b
            - k(2) * c.ipow(3);
        (i, j)
    }

    /// `y^2 = x^3 - 27 I x - 27 J`.
    pub fn jacobian(&self) -> WeierstrassModel {
        let (i, j) = self.invariants();
        let k = Polynomial::constant(Rational::from_i64(-27));
        WeierstrassModel::new(Polynomial::zero(), &k * &i, &k * &j, 2)
    }

    /// `j = 6912 I^3 / (4 I^3 - J^2)` of the fiber over `t`.
    pub fn j_invariant_at(&self, t: &Rational) -> Option<Rational> {
        let (i, j) = self.invariants();
        let i3 = i.eval(t).ipow(3);
        let den = Rational::from_i64(4) * &i3 - j.eval(t).ipow(2);
        if den.is_zero() {
            None
        } else {
            Some(Rational::from_i64(6912) * i3 / den)
        }
    }
}

/// `lim eps^10 K(eta/eps^5, 1/eps^2, xi/eps^2)` as a polynomial in `eta`
/// over `Q[xi]`; it should be `eta^2 - F(xi)` for the Rosenhain quintic `F`.
pub fn sextic_recovery_limit(curve: &RosenhainCurve) -> Result<Bivariate> {
    type L = Laurent<Bivariate>;
    let c = |r: Rational| -> Bivariate { Polynomial::constant(Polynomial::constant(r)) };
    let eta: Bivariate = Polynomial::x();
    let xi: Bivariate = Polynomial::constant(Polynomial::x());
    let one = || Rational::from_i64(1);

    let y = L::monomial(eta, -5);
    let x = L::monomial(c(one()), -2);
    let t = L::monomial(xi, -2);
    let mut rhs = t.clone() * (L::constant(c(one())) - x.clone() + t.clone());
    for l in &curve.lambda {
        rhs = rhs * (L::constant(c(l * l)) - L::constant(c(l.clone())) * x.clone() + t.clone());
    }
    laurent_limit(&(y.clone() * y - rhs), 10)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::fibrations::{classify_fibers, KodairaType};

    fn curve() -> RosenhainCurve {
        RosenhainCurve::new([rat(2, 1), rat(3, 1), rat(5, 1)]).unwrap()
    }

    #[test]
    fn quartic_degree_and_census() {
        let m = kummer_quartic_model(&curve());
        assert!(!m.q[4].is_zero());
        let c = classify_fibers(&m.jacobian()).unwrap();
        assert!(
            c.is(&[(KodairaType::I(2), 6), (KodairaType::IStar(0), 2)]),
            "{}",
            c.summary()
        );
        assert_eq!(c.euler_sum, 24);
    }

    #[test]
    fn recovers_the_quintic() {
        let c = curve();
        let lim = sextic_recovery_limit(&c).unwrap();
        let f = c.quintic();
        let expected: Bivariate = Polynomial::new(vec![
            Polynomial::constant(rat(0, 1)) - f,
            Polynomial::zero(),
            Polynomial::one(),
        ]);
        assert_eq!(lim, expected);
    }
}
