//! Loci in moduli where the singular fibers of the alternate fibration
//! collide.

use num_traits::Zero;

use super::{tables, FibrationParams};
use crate::error::{Error, Result};
use crate::exactmath::{eval_sparse, pow2_3, Rational, Ring};
use crate::invariants::{q_polynomial, SiegelForms};

/// `disc_t(P^2 - 4E) = SU2_DISC_FACTOR * e^3 * su2_bracket`.
pub const SU2_DISC_FACTOR: i64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegenerationFlags {
    /// Two `I1` fibers merge into an `I2`.
    pub su2_enhancement: bool,
    /// The `I2` fiber meets an `I1`, giving a fiber of type `III`.
    pub type_iii: bool,
    /// `e = 0`: the `I2` fiber is absorbed into `I10*`, giving `I12*`.
    pub so32_enhancement: bool,
}

pub fn su2_bracket(p: &FibrationParams) -> Rational {
    eval_sparse(tables::SU2_TERMS, &p.as_array())
}

/// `a c^2 d - b c^3 + d^3`.
pub fn type_iii_polynomial(p: &FibrationParams) -> Rational {
    let FibrationParams { a, b, c, d, .. } = p;
    a * c * c * d - b * c.ipow(3) + d.ipow(3)
}

/// `2 psi6 chi10^3 + 9 psi4 chi10^2 chi12 - 27 chi12^3`.
pub fn type_iii_siegel(s: &SiegelForms) -> Rational {
    let k = Rational::from_i64;
    k(2) * &s.psi6 * s.chi10.ipow(3) + k(9) * &s.psi4 * s.chi10.ipow(2) * &s.chi12
        - k(27) * s.chi12.ipow(3)
}

pub fn degeneration_flags(p: &FibrationParams) -> DegenerationFlags {
    DegenerationFlags {
        su2_enhancement: su2_bracket(p).is_zero(),
        type_iii: type_iii_polynomial(p).is_zero(),
        so32_enhancement: p.e.is_zero(),
    }
}

/// Flags from Siegel forms: `Q = 0`, the Siegel type-III expression, and
/// `chi10 = 0`; meaningful on the product locus too.
pub fn degeneration_flags_siegel(s: &SiegelForms) -> DegenerationFlags {
    DegenerationFlags {
        su2_enhancement: q_polynomial(s).is_zero(),
        type_iii: type_iii_siegel(s).is_zero(),
        so32_enhancement: s.chi10.is_zero(),
    }
}

/// Checks `disc_t(P^2 - 4E) = 4096 e^3 bracket`.
pub fn su2_bracket_identity(p: &FibrationParams) -> Result<Rational> {
    let disc = p.radicand().discriminant()?;
    let rhs = Rational::from_i64(SU2_DISC_FACTOR) * p.e.ipow(3) * su2_bracket(p);
    if disc != rhs {
        return Err(Error::violation(
            "t-discriminant of P^2 - 4E differs from 4096 e^3 times the bracket",
        ));
    }
    Ok(disc)
}

/// Checks `e^3 (a c^2 d - b c^3 + d^3) = -2^36/27 (2 psi6 chi10^3 + ...)`
/// through the dictionary; needs `chi10 != 0`.
pub fn type_iii_identity(s: &SiegelForms) -> Result<()> {
    let p = FibrationParams::from_siegel(s)?;
    let lhs = p.e.ipow(3) * type_iii_polynomial(&p);
    let rhs = -pow2_3(36, -3) * type_iii_siegel(s);
    if lhs != rhs {
        return Err(Error::violation(
            "type-III polynomial disagrees with its Siegel-form expression",
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, Polynomial};
    use crate::invariants::{igusa_from_rosenhain, igusa_from_sextic, siegel_from_igusa};

    #[test]
    fn generic_curve_has_no_degenerations() {
        let inv = igusa_from_rosenhain(&[rat(2, 1), rat(3, 1), rat(5, 1)]);
        let p = FibrationParams::from_igusa(&inv);
        let f = degeneration_flags(&p);
        assert!(!f.su2_enhancement && !f.type_iii && !f.so32_enhancement);
        su2_bracket_identity(&p).unwrap();
        type_iii_identity(&siegel_from_igusa(&inv)).unwrap();
    }

    #[test]
    fn even_sextic_is_su2() {
        let f = Polynomial::from_i64s(&[-36, 0, 49, 0, -14, 0, 1]);
        let inv = igusa_from_sextic(&f).unwrap();
        let p = FibrationParams::from_igusa(&inv);
        assert!(degeneration_flags(&p).su2_enhancement);
        assert!(degeneration_flags_siegel(&siegel_from_igusa(&inv)).su2_enhancement);
    }
}
