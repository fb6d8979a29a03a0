//! Dense bivariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rational;

/// `Σ c[a][b] z₁ᵃ z₂ᵇ` over the box `0 ≤ a ≤ A`, `0 ≤ b ≤ B`.
#[derive(Clone)]
pub struct BiPoly {
    deg1: usize,
    deg2: usize,
    coeffs: Vec<Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::with_box(0, 0)
    }

    /// All-zero polynomial on the box `A × B`.
    pub fn with_box(deg1: usize, deg2: usize) -> Self {
        BiPoly { deg1, deg2, coeffs: vec![Rational::zero(); (deg1 + 1) * (deg2 + 1)] }
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly { deg1: 0, deg2: 0, coeffs: vec![c] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `c·z₁ᵃz₂ᵇ`.
    pub fn monomial(a: usize, b: usize, c: Rational) -> Self {
        let mut p = Self::with_box(a, b);
        p.set(a, b, c);
        p
    }

    pub fn z1() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn z2() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    /// Declared degree box `(A, B)`.
    pub fn degree_box(&self) -> (usize, usize) {
        (self.deg1, self.deg2)
    }

    /// Coefficient of `z₁ᵃz₂ᵇ`; zero outside the box.
    pub fn coeff(&self, a: usize, b: usize) -> Rational {
        if a <= self.deg1 && b <= self.deg2 {
            self.coeffs[a * (self.deg2 + 1) + b].clone()
        } else {
            Rational::zero()
        }
    }

    fn coeff_ref(&self, a: usize, b: usize) -> &Rational {
        &self.coeffs[a * (self.deg2 + 1) + b]
    }

    /// # Panics
    /// Panics if `(a, b)` is outside the box.
    pub fn set(&mut self, a: usize, b: usize, c: Rational) {
        assert!(a <= self.deg1 && b <= self.deg2, "monomial outside degree box");
        self.coeffs[a * (self.deg2 + 1) + b] = c;
    }

    fn add_at(&mut self, a: usize, b: usize, c: &Rational) {
        let idx = a * (self.deg2 + 1) + b;
        self.coeffs[idx] += c;
    }

    fn widened(&self, deg1: usize, deg2: usize) -> Self {
        let mut out = Self::with_box(deg1.max(self.deg1), deg2.max(self.deg2));
        for a in 0..=self.deg1 {
            for b in 0..=self.deg2 {
                out.set(a, b, self.coeff_ref(a, b).clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BiPoly {
            deg1: self.deg1,
            deg2: self.deg2,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Smallest box holding every nonzero coefficient.
    pub fn support_box(&self) -> (usize, usize) {
        let (mut m1, mut m2) = (0, 0);
        for a in 0..=self.deg1 {
            for b in 0..=self.deg2 {
                if !self.coeff_ref(a, b).is_zero() {
                    m1 = m1.max(a);
                    m2 = m2.max(b);
                }
            }
        }
        (m1, m2)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Nonzero terms as `(a, b, c)` in lexicographic order of `(a, b)`.
    pub fn terms(&self) -> Vec<(usize, usize, Rational)> {
        let mut out = Vec::new();
        for a in 0..=self.deg1 {
            for b in 0..=self.deg2 {
                let c = self.coeff_ref(a, b);
                if !c.is_zero() {
                    out.push((a, b, c.clone()));
                }
            }
        }
        out
    }
}

impl PartialEq for BiPoly {
    /// Coefficientwise equality, independent of the declared boxes.
    fn eq(&self, other: &Self) -> bool {
        let d1 = self.deg1.max(other.deg1);
        let d2 = self.deg2.max(other.deg2);
        (0..=d1).all(|a| (0..=d2).all(|b| self.coeff(a, b) == other.coeff(a, b)))
    }
}

impl Eq for BiPoly {}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.widened(rhs.deg1, rhs.deg2);
        for a in 0..=rhs.deg1 {
            for b in 0..=rhs.deg2 {
                out.add_at(a, b, rhs.coeff_ref(a, b));
            }
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&Rational::integer(-1))
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::with_box(self.deg1 + rhs.deg1, self.deg2 + rhs.deg2);
        for a in 0..=self.deg1 {
            for b in 0..=self.deg2 {
                let c = self.coeff_ref(a, b);
                if c.is_zero() {
                    continue;
                }
                for x in 0..=rhs.deg1 {
                    for y in 0..=rhs.deg2 {
                        let d = rhs.coeff_ref(x, y);
                        if !d.is_zero() {
                            out.add_at(a + x, b + y, &(c * d));
                        }
                    }
                }
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            terms.iter().map(|(a, b, c)| format!("({c})z1^{a}z2^{b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
