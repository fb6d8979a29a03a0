//! Hahn polynomials in one, two and many discrete variables, evaluated in exact
//! rational arithmetic (and in `f64` where square-root normalizations make exact
//! sums impractical), together with sweeps that check their identities:
//! orthogonality, recurrences, difference equations, contiguity, structure and
//! generating-function relations.
//!
//! The bivariate family is realized three ways that are checked against one
//! another: the product of two univariate Hahn polynomials, the joint kernel of
//! two exact difference operators on the simplex grid, and the composition of
//! two univariate change-of-basis matrices.

pub mod classical;
pub mod error;
pub mod hahn_bi;
pub mod hahn_multi;
pub mod hahn_uni;
pub mod numeric;
pub mod oracle;
pub mod report;
pub mod sweeps;

pub use error::{Error, Result};
pub use hahn_bi::{BiParams, DegreePair, GridPoint, OverlapMatrix};
pub use hahn_multi::{MultiIndex, MultiParams};
pub use hahn_uni::UniParams;
pub use numeric::{BiPoly, RadicalScalar, Rational, RationalMatrix};
pub use report::{Check, Status, VerificationReport};

/// Parameter values used by the default sweeps.
pub fn parameter_lattice() -> Vec<Rational> {
    use numeric::q;
    vec![q(-1, 2), q(0, 1), q(1, 2), q(3, 1), q(7, 3)]
}

/// Options shared by the verification entry points.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Floating tolerance; ignored by exact checks.
    pub tol: f64,
    /// Fault injection: perturb one coefficient of the selected check.
    pub perturb: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { tol: 1e-10, perturb: false }
    }
}
