use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error(
        "root finder did not converge within {iterations} iterations (worst residual {worst:e})"
    )]
    NoConvergence {
        iterations: usize,
        worst: f64,
        residuals: Vec<f64>,
    },

    #[error("degenerate point: {0}")]
    DegeneratePoint(String),

    /// `I10 = 0`: the sextic does not define a smooth genus-two curve.
    #[error("not a genus-two curve: {0}")]
    NotACurve(String),

    /// `chi10 = 0`: the abelian surface is a product of elliptic curves.
    #[error("point lies on the product locus (chi10 = 0)")]
    ProductLocus,

    #[error("power-sum inversion is singular: {0}")]
    InversionSingular(String),

    /// `Phi` is undefined on the vanishing divisor of `chi35`.
    #[error("point lies on the chi35 vanishing divisor: {0}")]
    Chi35Divisor(String),

    /// The chosen labelling of Satake roots makes a Picard denominator vanish;
    /// another permutation should be tried.
    #[error("root ordering {ordering:?} is singular for the Picard formulas")]
    SingularOrdering { ordering: [usize; 6] },

    #[error("non-minimal Weierstrass model at {location}: orders (g2, g3, disc) = {orders}")]
    NonMinimal { location: String, orders: String },

    /// Two routes that must agree exactly did not.
    #[error("identity violated: {0}")]
    IdentityViolation(String),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Domain,
    Numeric,
    IdentityViolation,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::IdentityViolation(_) => ErrorKind::IdentityViolation,
            Error::NoConvergence { .. } => ErrorKind::Numeric,
            _ => ErrorKind::Domain,
        }
    }

    pub(crate) fn violation(msg: impl Into<String>) -> Self {
        Error::IdentityViolation(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
