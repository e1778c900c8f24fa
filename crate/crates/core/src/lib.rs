//! Genus-two curves, their Satake sextics, and the Jacobian elliptic
//! fibrations on the associated Kummer and Shioda-Inose K3 surfaces.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactmath`]: exact rationals, dense polynomials, resultants and
//!   discriminants, Laurent expansions and a complex root finder.
//! - [`thetafn`]: genus-two theta constants, the Frobenius identities, level-two
//!   Satake coordinates and the Picard formulas for Rosenhain roots.
//! - [`invariants`]: Igusa-Clebsch invariants of Rosenhain and general
//!   sextics, absolute invariants, the Igusa/Siegel dictionary, `chi35^2`, `Q`
//!   and the Humbert-locus predicates.
//! - [`satake`]: power sums, the Satake sextic (Bell and closed forms), the
//!   discriminant identity, reconstruction from Satake roots, and the moduli
//!   map `Phi` checked against a direct computation.
//! - [`fibrations`]: Weierstrass models of the four fibrations, Kodaira fiber
//!   classification, isogenies, the Nikulin involution and degenerations.
//!
//! Everything is a pure function over immutable values.

pub mod error;
pub mod exactmath;
pub mod fibrations;
pub mod invariants;
pub mod satake;
pub mod thetafn;

pub use error::{Error, ErrorKind, Result};
