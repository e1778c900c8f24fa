//! Exact arithmetic substrate.
//!
//! Identities elsewhere in the crate involve constants such as `2^210 * 3^132`,
//! so the exact layer is built on arbitrary-precision integers throughout.
//! [`Polynomial`] is dense and generic over any [`Ring`], which lets the same
//! type carry rational, complex and polynomial coefficients (the latter giving
//! bivariate polynomials).

mod laurent;
mod poly;
mod roots;
mod scalar;

pub use laurent::{laurent_limit, Laurent};
pub use poly::Polynomial;
pub use roots::{complex_roots, RootOptions, DEFAULT_MAX_ITER, DEFAULT_ROOT_TOL};
pub use scalar::{
    eval_sparse, format_rational, parse_rational, pow2_3, rat, rational_sqrt, to_complex, Complex,
    Rational, Ring, Scalar,
};
