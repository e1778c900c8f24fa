//! The map `Phi: (j1, j2, j3) -> (j1', j2', j3')` sending a curve to the
//! Satake sextic `y^2 = f(x)`, computed three ways that must agree exactly.

use crate::error::{Error, Result};
use crate::exactmath::{eval_sparse, pow2_3, rat, rational_sqrt, Rational, Ring};
use crate::invariants::{
    absolute_invariants, igusa_from_sextic, q_polynomial, siegel_from_igusa, AbsoluteInvariants,
    IgusaInvariants, SiegelForms,
};

use super::{power_sums_from_igusa, satake_sextic, satake_sextic_from_siegel, tables};

/// Values of the rational-map polynomials at `(j1, j2, j3)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiPolynomials {
    pub q: Rational,
    /// `g1 = m^5`.
    pub m: Rational,
    pub g1: Rational,
    pub g2: Rational,
    pub g3: Rational,
    pub g2_cofactor: Rational,
    pub g3_cofactor: Rational,
}

pub fn phi_polynomials(j: &AbsoluteInvariants) -> PhiPolynomials {
    let v = j.as_array();
    let m = eval_sparse(tables::PHI_M_TERMS, &v);
    let g2_cofactor = eval_sparse(tables::PHI_G2_COFACTOR, &v);
    let g3_cofactor = eval_sparse(tables::PHI_G3_COFACTOR, &v);
    PhiPolynomials {
        q: eval_sparse(tables::PHI_Q_TERMS, &v),
        g1: m.ipow(5),
        g2: &g2_cofactor * m.ipow(3),
        g3: &g3_cofactor * m.ipow(2),
        m,
        g2_cofactor,
        g3_cofactor,
    }
}

/// Image of `Phi` with the intermediate quantities of the computation.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiResult {
    /// `(64 g1, 4 g2, g3) / (729 q)`.
    pub j_image: AbsoluteInvariants,
    pub polynomials: PhiPolynomials,
    /// Igusa representative of the source point actually used.
    pub source: IgusaInvariants,
    pub siegel: SiegelForms,
    /// Siegel forms at the image point.
    pub siegel_image: SiegelForms,
    pub k: Rational,
    pub l: Rational,
    /// `psi4^3 - psi6^2 + 2^13 3^4 5 chi12`.
    pub big_m: Rational,
    /// `Q` at the source point.
    pub q_source: Rational,
    /// `Q` at the image point.
    pub q_image: Rational,
    /// `Q' / (2^210 3^132 Q^3)`.
    pub n_squared: Rational,
    pub n: Option<Rational>,
}

/// `Phi` at absolute invariants, using the representative
/// `I = (1, j2/j1, j3/j1, 1/j1)`.
pub fn phi_map(j: &AbsoluteInvariants) -> Result<PhiResult> {
    if j.j1 == Rational::from_i64(0) {
        return Err(Error::domain("Phi needs j1 != 0"));
    }
    let inv = IgusaInvariants::new(
        Rational::from_i64(1),
        &j.j2 / &j.j1,
        &j.j3 / &j.j1,
        Rational::from_i64(1) / &j.j1,
    );
    phi_map_igusa(&inv)
}

/// `Phi` at an Igusa tuple with `I2 != 0` and `I10 != 0`.
pub fn phi_map_igusa(inv: &IgusaInvariants) -> Result<PhiResult> {
    let j = absolute_invariants(inv)?;
    if j.j1 == Rational::from_i64(0) {
        return Err(Error::domain("Phi needs I2 != 0"));
    }
    let polys = phi_polynomials(&j);
    let zero = Rational::from_i64(0);
    if polys.q == zero {
        return Err(Error::Chi35Divisor("q(j1, j2, j3) = 0".into()));
    }
    let j_image = AbsoluteInvariants {
        j1: rat(64, 729) * &polys.g1 / &polys.q,
        j2: rat(4, 729) * &polys.g2 / &polys.q,
        j3: rat(1, 729) * &polys.g3 / &polys.q,
    };

    let s = siegel_from_igusa(inv);
    let q_source = q_polynomial(&s);
    let i2 = &inv.i2;
    if &q_source * pow2_3(63, 0) * j.j1.ipow(15) != &polys.q * i2.ipow(30) {
        return Err(Error::violation("Q I2^-30 differs from 2^-63 j1^-15 q"));
    }

    // oracle: Igusa invariants of the sextic itself
    let f = satake_sextic_from_siegel(&s);
    if f != satake_sextic(&power_sums_from_igusa(inv))? {
        return Err(Error::violation(
            "Satake sextic from Siegel forms differs from the power-sum construction",
        ));
    }
    let image_inv = igusa_from_sextic(&f)?;
    let oracle = absolute_invariants(&image_inv)?;
    if oracle != j_image {
        return Err(Error::violation(format!(
            "appendix polynomials and sextic invariants disagree: {:?} vs {:?}",
            j_image, oracle
        )));
    }

    let s_image = siegel_from_igusa(&image_inv);
    let big_m = s.psi4.ipow(3) - s.psi6.ipow(2) + rat(2i64.pow(13) * 81 * 5, 1) * &s.chi12;
    if s_image.chi10 != -pow2_3(38, 21) * &q_source {
        return Err(Error::violation(
            "chi10 at the image differs from -2^38 3^21 Q",
        ));
    }
    if s_image.chi12 != pow2_3(40, 23) * &q_source * &big_m {
        return Err(Error::violation(
            "chi12 at the image differs from 2^40 3^23 Q M",
        ));
    }
    let k = &s_image.psi4 * pow2_3(-4, -6);
    let l = -&s_image.psi6 * pow2_3(-6, -9);

    // the proof's scaled quantities against the appendix factors
    let j1 = &j.j1;
    let m = pow2_3(6, 0) * j1.ipow(3) * &big_m / i2.ipow(6);
    let k_s = pow2_3(12, 0) * j1.ipow(6) * &k / i2.ipow(12);
    let l_s = pow2_3(18, 0) * j1.ipow(9) * &l / i2.ipow(18);
    if m != polys.m {
        return Err(Error::violation(
            "scaled M differs from the fifth root of g1",
        ));
    }
    if k_s != polys.g2_cofactor {
        return Err(Error::violation("scaled K differs from g2 / m^3"));
    }
    if (&l_s + Rational::from_i64(4) * &k_s * &m) / Rational::from_i64(3) != polys.g3_cofactor {
        return Err(Error::violation("(l + 4 k m) / 3 differs from g3 / m^2"));
    }

    let q_image = q_polynomial(&s_image);
    let n_squared = &q_image / (pow2_3(210, 132) * q_source.ipow(3));
    let n = rational_sqrt(&n_squared);
    Ok(PhiResult {
        j_image,
        polynomials: polys,
        source: inv.clone(),
        siegel: s,
        siegel_image: s_image,
        k,
        l,
        big_m,
        q_source,
        q_image,
        n_squared,
        n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Polynomial;
    use crate::invariants::igusa_from_rosenhain;

    #[test]
    fn reference_curve_agrees() {
        let inv = igusa_from_rosenhain(&[rat(2, 1), rat(3, 1), rat(5, 1)]);
        let a = phi_map_igusa(&inv).unwrap();
        let b = phi_map(&absolute_invariants(&inv).unwrap()).unwrap();
        assert_eq!(a.j_image, b.j_image);
        assert!(a.n.is_some());
    }

    #[test]
    fn even_sextic_is_on_the_divisor() {
        let f = Polynomial::from_i64s(&[-36, 0, 49, 0, -14, 0, 1]);
        let inv = igusa_from_sextic(&f).unwrap();
        assert!(matches!(phi_map_igusa(&inv), Err(Error::Chi35Divisor(_))));
    }
}
