//! Jacobi and Laguerre polynomials as exact coefficient lists, and their
//! lowering/raising relations and the Laguerre addition formula as coefficient
//! identities.

use std::ops::{Add, Mul, Sub};

use crate::error::Error;
use crate::numeric::{factorial, pochhammer, BiPoly, Rational};
use crate::report::{ExactTally, VerificationReport};

/// Coefficients `c₀…c_n` in ascending powers of `z`, trailing zeros trimmed.
/// The zero polynomial is stored as `[0]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyCoeffs(Vec<Rational>);

impl PolyCoeffs {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.len() > 1 && c.last().is_some_and(Rational::is_zero) {
            c.pop();
        }
        if c.is_empty() {
            c.push(Rational::zero());
        }
        PolyCoeffs(c)
    }

    pub fn zero() -> Self {
        PolyCoeffs(vec![Rational::zero()])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `a + b·z`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    /// Coefficient of `zʲ`, zero past the degree.
    pub fn coeff(&self, j: usize) -> Rational {
        self.0.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_zero()
    }

    /// Degree; zero for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.0.iter().enumerate().skip(1).map(|(j, c)| c * Rational::from(j)).collect())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.0.iter().map(|c| c * s).collect())
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * z + c)
    }

    /// `Σ cⱼ · numʲ · den^(degree−j)` as a bivariate polynomial.
    ///
    /// # Panics
    /// Panics if `degree` is below the polynomial's degree.
    pub fn homogenize(&self, num: &BiPoly, den: &BiPoly, degree: usize) -> BiPoly {
        assert!(degree >= self.degree() || self.is_zero(), "homogenization degree too small");
        let mut out = BiPoly::zero();
        for (j, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = &num.pow(j) * &den.pow(degree - j);
            out = &out + &term.scale(c);
        }
        out
    }

    /// `p(a·x + b·y)` with `x = z₁`, `y = z₂`.
    pub fn substitute_linear(&self, a: &Rational, b: &Rational) -> BiPoly {
        let lin = &BiPoly::z1().scale(a) + &BiPoly::z2().scale(b);
        self.homogenize(&lin, &BiPoly::one(), self.degree())
    }
}

impl Add for &PolyCoeffs {
    type Output = PolyCoeffs;
    fn add(self, rhs: &PolyCoeffs) -> PolyCoeffs {
        let n = self.0.len().max(rhs.0.len());
        PolyCoeffs::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &PolyCoeffs {
    type Output = PolyCoeffs;
    fn sub(self, rhs: &PolyCoeffs) -> PolyCoeffs {
        let n = self.0.len().max(rhs.0.len());
        PolyCoeffs::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Mul for &PolyCoeffs {
    type Output = PolyCoeffs;
    fn mul(self, rhs: &PolyCoeffs) -> PolyCoeffs {
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyCoeffs::new(out)
    }
}

/// `P_n^{(α,β)}(z)`, expanded from the `₂F₁` in `(1−z)/2`.
///
/// The prefactor `(α+1)_n/(α+1)_j` is taken as `(α+1+j)_{n−j}`, so every
/// rational `α` (including negative integers) is admissible.
pub fn jacobi_coeffs(n: usize, alpha: &Rational, beta: &Rational) -> PolyCoeffs {
    let half_one_minus_z = PolyCoeffs::linear(Rational::new(1, 2), Rational::new(-1, 2));
    let top = alpha + beta + Rational::from(n + 1);
    let mut out = PolyCoeffs::zero();
    let mut power = PolyCoeffs::constant(Rational::one());
    for j in 0..=n {
        let c = pochhammer(&-Rational::from(n), j) * pochhammer(&top, j)
            * pochhammer(&(alpha + Rational::from(j + 1)), n - j)
            / (factorial(n) * factorial(j));
        out = &out + &power.scale(&c);
        power = &power * &half_one_minus_z;
    }
    out
}

/// `L_n^{(α)}(z)`, expanded from the `₁F₁`, valid for every rational `α`.
pub fn laguerre_coeffs(n: usize, alpha: &Rational) -> PolyCoeffs {
    PolyCoeffs::new(
        (0..=n)
            .map(|j| {
                pochhammer(&-Rational::from(n), j) * pochhammer(&(alpha + Rational::from(j + 1)), n - j)
                    / (factorial(n) * factorial(j))
            })
            .collect(),
    )
}

pub const CLASSICAL_RELATIONS: [&str; 7] = [
    "jacobi-lower-1",
    "jacobi-lower-2",
    "jacobi-raise-1",
    "jacobi-raise-2",
    "laguerre-lower",
    "laguerre-raise",
    "laguerre-addition",
];

fn int(n: i64) -> Rational {
    Rational::integer(n)
}

fn lower_or_zero(n: usize, f: impl FnOnce(usize) -> PolyCoeffs) -> PolyCoeffs {
    if n == 0 {
        PolyCoeffs::zero()
    } else {
        f(n - 1)
    }
}

/// Both sides of a single-variable relation.
fn classical_sides(relation: &str, n: usize, a: &Rational, b: &Rational) -> Option<(PolyCoeffs, PolyCoeffs)> {
    let nr = Rational::from(n);
    let sides = match relation {
        "jacobi-lower-1" => {
            let p = jacobi_coeffs(n, a, b);
            let c = (&nr + a + b + 1) / 2;
            let rhs = lower_or_zero(n, |m| jacobi_coeffs(m, &(a + 1), &(b + 1))).scale(&c);
            (p.derivative(), rhs)
        }
        "jacobi-lower-2" => {
            let p = jacobi_coeffs(n, a, b);
            let d1 = p.derivative();
            let d2 = d1.derivative();
            let lhs = &(&PolyCoeffs::linear(int(-1), int(1)) * &d2) + &d1.scale(&(a + 1));
            let c = (&nr + a) * (&nr + a + b + 1) / 2;
            let rhs = lower_or_zero(n, |m| jacobi_coeffs(m, a, &(b + 2))).scale(&c);
            (lhs, rhs)
        }
        "jacobi-raise-1" => {
            let p = jacobi_coeffs(n, a, b);
            let one_minus_z2 = PolyCoeffs::new(vec![int(1), int(0), int(-1)]);
            let lin = PolyCoeffs::linear(b - a, -(a + b));
            let lhs = &(&one_minus_z2 * &p.derivative()) + &(&lin * &p);
            let rhs = jacobi_coeffs(n + 1, &(a - 1), &(b - 1)).scale(&(int(-2) * (&nr + 1)));
            (lhs, rhs)
        }
        "jacobi-raise-2" => {
            let p = jacobi_coeffs(n, a, b);
            let d1 = p.derivative();
            let d2 = d1.derivative();
            let one_plus_z = PolyCoeffs::linear(int(1), int(1));
            let z2_minus_1 = PolyCoeffs::new(vec![int(-1), int(0), int(1)]);
            let c1 = &one_plus_z * &PolyCoeffs::linear(a - b * 2 + 1, a + b * 2 + 1);
            let c0 = PolyCoeffs::linear(b * (a + 2 - b), b * (a + b));
            let lhs = &(&(&(&one_plus_z * &z2_minus_1) * &d2) + &(&c1 * &d1)) + &(&c0 * &p);
            let c = int(2) * (&nr + 1) * (&nr + b);
            let rhs = jacobi_coeffs(n + 1, a, &(b - 2)).scale(&c);
            (lhs, rhs)
        }
        "laguerre-lower" => {
            let l = laguerre_coeffs(n, a);
            let rhs = lower_or_zero(n, |m| laguerre_coeffs(m, &(a + 1))).scale(&int(-1));
            (l.derivative(), rhs)
        }
        "laguerre-raise" => {
            let l = laguerre_coeffs(n, a);
            let z = PolyCoeffs::linear(int(0), int(1));
            let lhs = &(&z * &l.derivative()) + &(&PolyCoeffs::linear(a.clone(), int(-1)) * &l);
            let rhs = laguerre_coeffs(n + 1, &(a - 1)).scale(&(&nr + 1));
            (lhs, rhs)
        }
        _ => return None,
    };
    Some(sides)
}

/// `L_n^{(α+β+1)}(x+y)` and `Σ_{ℓ+k=n} L_ℓ^{(α)}(x) L_k^{(β)}(y)`.
pub fn laguerre_addition_sides(n: usize, a: &Rational, b: &Rational) -> (BiPoly, BiPoly) {
    let one = Rational::one();
    let lhs = laguerre_coeffs(n, &(a + b + 1)).substitute_linear(&one, &one);
    let mut rhs = BiPoly::zero();
    for l in 0..=n {
        let x = laguerre_coeffs(l, a).substitute_linear(&one, &Rational::zero());
        let y = laguerre_coeffs(n - l, b).substitute_linear(&Rational::zero(), &one);
        rhs = &rhs + &(&x * &y);
    }
    (lhs, rhs)
}

/// Checks one relation at degree `n` as an exact coefficient identity.
/// `beta` is ignored by the single-parameter Laguerre relations.
pub fn verify_classical(relation: &str, n: usize, alpha: &Rational, beta: &Rational) -> Result<VerificationReport, Error> {
    let mut tally = ExactTally::new(relation);
    if relation == "laguerre-addition" {
        let (lhs, rhs) = laguerre_addition_sides(n, alpha, beta);
        let (d1, d2) = lhs.support_box();
        let (e1, e2) = rhs.support_box();
        for x in 0..=d1.max(e1) {
            for y in 0..=d2.max(e2) {
                tally.record(|| format!("x^{x} y^{y}"), &lhs.coeff(x, y), &rhs.coeff(x, y));
            }
        }
    } else {
        let (lhs, rhs) =
            classical_sides(relation, n, alpha, beta).ok_or_else(|| Error::UnknownCheck(relation.to_string()))?;
        for j in 0..=lhs.degree().max(rhs.degree()) {
            tally.record(|| format!("z^{j}"), &lhs.coeff(j), &rhs.coeff(j));
        }
    }
    Ok(VerificationReport::new(
        "classical",
        format!("n={n} alpha={alpha} beta={beta}"),
        vec![tally.finish()],
    ))
}
