//! Numbers of the form `r·√s`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::Error;

/// Largest trial divisor used when pulling square factors out of a radicand.
const SQUARE_SEARCH: u32 = 1000;

/// `(r, s)` with `n = r²·s` and `s` free of squares of integers up to [`SQUARE_SEARCH`].
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let (mut root, mut rest) = (BigInt::one(), n.clone());
    for d in 2..=SQUARE_SEARCH {
        let dd = BigInt::from(d * d);
        if dd > rest {
            break;
        }
        while (&rest % &dd).is_zero() {
            rest /= &dd;
            root *= d;
        }
    }
    (root, rest)
}

/// `coeff·√radicand` with `radicand ≥ 0`.
///
/// Radicands are not reduced to squarefree form, so two representations of
/// one value compare equal through the squared test instead of fieldwise.
#[derive(Clone)]
pub struct RadicalScalar {
    coeff: Rational,
    radicand: Rational,
}

impl RadicalScalar {
    pub fn new(coeff: Rational, radicand: Rational) -> Result<Self, Error> {
        if radicand.is_negative() {
            return Err(Error::NegativeRadicand(radicand.to_string()));
        }
        if coeff.is_zero() || radicand.is_zero() {
            return Ok(Self::zero());
        }
        Ok(RadicalScalar { coeff, radicand })
    }

    pub fn zero() -> Self {
        RadicalScalar { coeff: Rational::zero(), radicand: Rational::zero() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        if r.is_zero() {
            Self::zero()
        } else {
            RadicalScalar { coeff: r, radicand: Rational::one() }
        }
    }

    /// `1·√s`.
    pub fn sqrt(s: Rational) -> Result<Self, Error> {
        Self::new(Rational::one(), s)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn signum(&self) -> i32 {
        self.coeff.signum()
    }

    /// `coeff²·radicand`, the exact square of the value.
    pub fn squared(&self) -> Rational {
        self.coeff.square() * &self.radicand
    }

    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64() * self.radicand.to_f64().sqrt()
    }

    /// Equivalent representation with square factors of the radicand folded into the coefficient.
    pub fn simplified(&self) -> Self {
        if let Some(r) = self.radicand.exact_sqrt() {
            return Self::from_rational(&self.coeff * r);
        }
        let (rn, sn) = split_square(self.radicand.numer());
        let (rd, sd) = split_square(self.radicand.denom());
        let scale = Rational::from_bigints(rn, rd).expect("nonzero denominator");
        let radicand = Rational::from_bigints(sn, sd).expect("nonzero denominator");
        RadicalScalar { coeff: &self.coeff * scale, radicand }
    }
}

impl PartialEq for RadicalScalar {
    fn eq(&self, other: &Self) -> bool {
        self.signum() == other.signum() && self.squared() == other.squared()
    }
}

impl Eq for RadicalScalar {}

impl Mul for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        RadicalScalar::new(&self.coeff * &rhs.coeff, &self.radicand * &rhs.radicand)
            .expect("product of nonnegative radicands")
    }
}

impl Mul for RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: RadicalScalar) -> RadicalScalar {
        &self * &rhs
    }
}

impl fmt::Display for RadicalScalar {
    /// `c`, `c*sqrt(s)`, `sqrt(s)` or `-sqrt(s)`; perfect-square radicands are folded first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.simplified();
        if s.radicand.is_one() || s.is_zero() {
            write!(f, "{}", s.coeff)
        } else if s.coeff.is_one() {
            write!(f, "sqrt({})", s.radicand)
        } else if (-&s.coeff).is_one() {
            write!(f, "-sqrt({})", s.radicand)
        } else {
            write!(f, "{}*sqrt({})", s.coeff, s.radicand)
        }
    }
}

impl fmt::Debug for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*sqrt({})", self.coeff, self.radicand)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q;

    #[test]
    fn zero_is_canonical() {
        let z = RadicalScalar::new(q(0, 1), q(5, 1)).unwrap();
        assert_eq!(z.coeff(), &Rational::zero());
        assert_eq!(z.radicand(), &Rational::zero());
        let z = RadicalScalar::new(q(3, 1), q(0, 1)).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.radicand(), &Rational::zero());
    }

    #[test]
    fn rejects_negative_radicand() {
        assert!(RadicalScalar::new(q(1, 1), q(-1, 2)).is_err());
    }

    #[test]
    fn equality_is_squared_and_signed() {
        let a = RadicalScalar::new(q(2, 1), q(3, 1)).unwrap();
        let b = RadicalScalar::new(q(1, 1), q(12, 1)).unwrap();
        let c = RadicalScalar::new(q(-1, 1), q(12, 1)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn display_folds_squares() {
        assert_eq!(RadicalScalar::sqrt(q(1, 1)).unwrap().to_string(), "1");
        assert_eq!(RadicalScalar::new(q(-1, 1), q(3, 2)).unwrap().to_string(), "-sqrt(3/2)");
        assert_eq!(RadicalScalar::new(q(1, 2), q(9, 4)).unwrap().to_string(), "3/4");
        assert_eq!(RadicalScalar::sqrt(q(1, 3)).unwrap().to_string(), "sqrt(1/3)");
        assert_eq!(RadicalScalar::new(q(12, 1), q(1, 480)).unwrap().to_string(), "3*sqrt(1/30)");
        assert_eq!(RadicalScalar::new(q(1, 1), q(50, 27)).unwrap().to_string(), "5/3*sqrt(2/3)");
    }
}
