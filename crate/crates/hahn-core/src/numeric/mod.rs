//! Exact arithmetic substrate.

mod bipoly;
mod comb;
mod matrix;
mod pfq;
mod radical;
mod rational;

pub use bipoly::BiPoly;
pub use comb::{binomial, factorial, multinomial, pochhammer, pochhammer_int};
pub use matrix::{normalize_leading, RationalMatrix};
pub use pfq::pfq_terminating;
pub use radical::RadicalScalar;
pub use rational::{q, Rational};

/// `num/den`, or `limit` when both vanish.
///
/// # Panics
/// Panics when only the denominator vanishes.
pub fn ratio_or(num: Rational, den: &Rational, limit: Rational) -> Rational {
    if den.is_zero() {
        assert!(num.is_zero(), "nonremovable singularity {num}/0");
        limit
    } else {
        num / den
    }
}

/// Residual of `lhs ≈ rhs` relative to their magnitude: `|l−r| / (1 + max(|l|, |r|))`.
pub fn relative_residual(lhs: f64, rhs: f64) -> f64 {
    let r = (lhs - rhs).abs() / (1.0 + lhs.abs().max(rhs.abs()));
    if r.is_nan() {
        f64::INFINITY
    } else {
        r
    }
}

/// 17 significant digits in scientific notation.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}
