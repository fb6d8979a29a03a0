//! Identities of the orthonormal family `Q`, checked in `f64`.
//!
//! Coefficients are assembled as exact rationals (squared where a root is
//! involved) and converted once, so the only rounding is in the final root and
//! in the sums.

use super::{exact::omega, simplex, BiParams, Tables};
use crate::numeric::{ratio_or, Rational};
use crate::report::{Check, FloatTally};
use crate::VerifyOptions;

fn ri(x: i64) -> Rational {
    Rational::integer(x)
}

fn root(x: &Rational) -> f64 {
    x.to_f64().sqrt()
}

/// `(x)₂ = x(x+1)`.
fn p2(x: Rational) -> Rational {
    &x * (&x + 1)
}

fn isimplex(level: usize) -> Vec<(i64, i64)> {
    simplex(level).into_iter().map(|(a, b)| (a as i64, b as i64)).collect()
}

/// Coefficients of the normalized relations for one parameter set.
///
/// `α, β, γ, δ` connect level `N` at `α` with level `N−1` at `α₁+1`; the
/// recurrence coefficients `A…E` are their bilinear combinations:
/// `A(m,n) = α(m−1,n)β(m,n)`, `B(m,n) = α(m,n−1)γ(m,n) + β(m,n)δ(m,n)`,
/// `C(m,n) = γ(m−1,n)δ(m,n−1)`, `D(m,n) = α(m−1,n)δ(m,n) + β(m,n−1)γ(m−1,n)`,
/// `E = α² + β² + γ² + δ(m,n+1)²`.
pub struct NormalizedCoefficients {
    p: BiParams,
}

impl NormalizedCoefficients {
    pub fn new(p: &BiParams) -> Self {
        NormalizedCoefficients { p: p.clone() }
    }

    fn parts(&self) -> (&Rational, &Rational, &Rational, Rational, Rational, i64) {
        (&self.p.alpha1, &self.p.alpha2, &self.p.alpha3, self.p.a12(), self.p.a123(), self.p.n as i64)
    }

    pub fn alpha_sq(&self, m: i64, n: i64) -> Rational {
        let (a1, _, _, a12, a123, big) = self.parts();
        if m < 0 || n < 0 || m + n > big {
            return Rational::zero();
        }
        ratio_or(&a12 + (m + 1), &(&a12 + (2 * m + 1)), Rational::one())
            * ratio_or(&a123 + (n + 2 * m + 2), &(&a123 + (2 * n + 2 * m + 2)), Rational::one())
            * (a1 + (m + 1))
            * (&a12 + (n + 2 * m + 2))
            * ri(big - m - n)
            / ((&a12 + (2 * m + 2)) * (&a123 + (2 * n + 2 * m + 3)))
    }

    pub fn beta_sq(&self, m: i64, n: i64) -> Rational {
        let (_, a2, _, a12, a123, big) = self.parts();
        if m <= 0 || n < 0 || m + n > big + 1 {
            return Rational::zero();
        }
        ri(m) * (a2 + m) * (&a12 + (n + 2 * m + 1)) / (&a12 + (2 * m + 1)) * (&a123 + (n + 2 * m + 1))
            / (&a123 + (2 * n + 2 * m + 1))
            * (&a123 + (big + m + n + 2))
            / ((&a12 + 2 * m) * (&a123 + (2 * n + 2 * m + 2)))
    }

    pub fn gamma_sq(&self, m: i64, n: i64) -> Rational {
        let (a1, _, a3, a12, a123, big) = self.parts();
        if n <= 0 || m < 0 || m + n > big + 1 {
            return Rational::zero();
        }
        ri(n) * (a3 + n) * (a1 + (m + 1))
            * ratio_or(&a12 + (m + 1), &(&a12 + (2 * m + 1)), Rational::one())
            * (&a123 + (big + m + n + 2))
            / ((&a12 + (2 * m + 2)) * (&a123 + (2 * n + 2 * m + 1)) * (&a123 + (2 * n + 2 * m + 2)))
    }

    pub fn delta_sq(&self, m: i64, n: i64) -> Rational {
        let (_, a2, a3, a12, a123, big) = self.parts();
        if m <= 0 || n <= 0 || m + n > big + 1 {
            return Rational::zero();
        }
        ri(m * n) * (a2 + m) * (a3 + n) * ri(big - m - n + 1)
            / ((&a12 + 2 * m) * (&a12 + (2 * m + 1)) * (&a123 + (2 * n + 2 * m)) * (&a123 + (2 * n + 2 * m + 1)))
    }

    pub fn alpha(&self, m: i64, n: i64) -> f64 {
        root(&self.alpha_sq(m, n))
    }

    pub fn beta(&self, m: i64, n: i64) -> f64 {
        root(&self.beta_sq(m, n))
    }

    pub fn gamma(&self, m: i64, n: i64) -> f64 {
        root(&self.gamma_sq(m, n))
    }

    pub fn delta(&self, m: i64, n: i64) -> f64 {
        root(&self.delta_sq(m, n))
    }

    /// `(m+α₁₂)/(2m+α₁₂−1)`, which tends to 1 at `m = 1`, `α₁₂ = −1`.
    fn low_ratio(&self, m: i64) -> Rational {
        let a12 = self.p.a12();
        ratio_or(&a12 + m, &(&a12 + (2 * m - 1)), Rational::one())
    }

    pub fn rec_a_sq(&self, m: i64, n: i64) -> Rational {
        let (a1, a2, _, a12, a123, big) = self.parts();
        if m <= 0 || n < 0 || m + n > big + 1 {
            return Rational::zero();
        }
        let outer = &a123 + (n + 2 * m);
        ri(m) * (a1 + m) * (a2 + m) * self.low_ratio(m)
            * p2(&a12 + (n + 2 * m))
            * ratio_or(outer.clone(), &(&a123 + (2 * n + 2 * m)), Rational::one())
            * (outer + 1)
            * (&a123 + (big + m + n + 2))
            * ri(big - m - n + 1)
            / ((&a12 + 2 * m) * p2(&a12 + 2 * m) * (&a123 + (2 * n + 2 * m + 1)) * p2(&a123 + (2 * n + 2 * m + 1)))
    }

    pub fn rec_b(&self, m: i64, n: i64) -> f64 {
        let (a1, a2, a3, a12, a123, big) = self.parts();
        if n <= 0 || m < 0 || m + n > big + 1 {
            return 0.0;
        }
        let x = &a123 + (2 * m + 2 * n);
        let rad = ri(n) * (a3 + n) * (&a12 + (n + 2 * m + 1))
            * ratio_or(&a123 + (n + 2 * m + 1), &x, Rational::one())
            * (&a123 + (big + m + n + 2))
            * ri(big - m - n + 1)
            / ((&x + 1) * p2(x + 1));
        // brace / (2m+α₁₂+1), the second term's ratio is 1 in the limit
        let mut brace = (a1 + (m + 1)) * ratio_or(&a12 + (m + 1), &(&a12 + (2 * m + 1)), Rational::one())
            / (&a12 + (2 * m + 2));
        if m > 0 {
            brace += ri(m) * (a2 + m) / ((&a12 + 2 * m) * (&a12 + (2 * m + 1)));
        }
        root(&rad) * brace.to_f64()
    }

    pub fn rec_c_sq(&self, m: i64, n: i64) -> Rational {
        let (a1, a2, a3, a12, a123, big) = self.parts();
        if m <= 0 || n <= 1 || m + n > big + 2 {
            return Rational::zero();
        }
        ri(m * n * (n - 1)) * (a1 + m) * (a2 + m) * self.low_ratio(m)
            * p2(a3 + (n - 1))
            * (&a123 + (big + m + n + 1))
            * ri(big - m - n + 2)
            / ((&a12 + 2 * m) * p2(&a12 + 2 * m) * p2(&a123 + (2 * n + 2 * m - 2)) * p2(&a123 + (2 * n + 2 * m - 1)))
    }

    pub fn rec_d(&self, m: i64, n: i64) -> f64 {
        let (a1, a2, a3, a12, a123, big) = self.parts();
        if m <= 0 || n <= 0 || m + n > big + 1 {
            return 0.0;
        }
        let rad = ri(m * n) * (a1 + m) * (a2 + m) * self.low_ratio(m) * (a3 + n) * (&a12 + (n + 2 * m))
            * (&a123 + (n + 2 * m))
            / ((&a12 + 2 * m) * p2(&a12 + 2 * m));
        let tail = (&a123 + (2 * big + 3)) / ((&a123 + (2 * n + 2 * m - 1)) * (&a123 + (2 * n + 2 * m + 1)));
        root(&rad) * tail.to_f64()
    }

    pub fn rec_e(&self, m: i64, n: i64) -> Rational {
        let (a1, a2, a3, a12, a123, big) = self.parts();
        let r1 = ratio_or(&a12 + (m + 1), &(&a12 + (2 * m + 1)), Rational::one());
        let top = &a123 + (big + m + n + 2);
        let mut e = (a1 + (m + 1)) * &r1 * (&a12 + (n + 2 * m + 2))
            * ratio_or(&a123 + (n + 2 * m + 2), &(&a123 + (2 * n + 2 * m + 2)), Rational::one())
            * ri(big - m - n)
            / ((&a12 + (2 * m + 2)) * (&a123 + (2 * n + 2 * m + 3)));
        if n > 0 {
            e += (a1 + (m + 1)) * &r1 * ri(n) * (a3 + n) * &top
                / ((&a12 + (2 * m + 2)) * p2(&a123 + (2 * n + 2 * m + 1)));
        }
        if m > 0 {
            let head = ri(m) * (a2 + m) / p2(&a12 + 2 * m);
            e += &head * ri(n + 1) * (a3 + (n + 1)) * ri(big - m - n) / p2(&a123 + (2 * n + 2 * m + 2));
            e += head * (&a12 + (n + 2 * m + 1)) * (&a123 + (n + 2 * m + 1)) * &top
                / p2(&a123 + (2 * m + 2 * n + 1));
        }
        e
    }

    pub fn rec_a(&self, m: i64, n: i64) -> f64 {
        root(&self.rec_a_sq(m, n))
    }

    pub fn rec_c(&self, m: i64, n: i64) -> f64 {
        root(&self.rec_c_sq(m, n))
    }
}

fn bump(opts: &VerifyOptions) -> f64 {
    if opts.perturb {
        1.001
    } else {
        1.0
    }
}

fn at(rel: &str, d: (i64, i64), g: (i64, i64)) -> String {
    format!("{rel} degree ({},{}) point ({},{})", d.0, d.1, g.0, g.1)
}

/// Four relations linking `Q` at `(α; N)` to `Q` at `(α₁+1, α₂, α₃; N−1)` or `(α₁, α₂+1, α₃; N−1)`.
pub(crate) fn structure(t: &Tables, opts: &VerifyOptions) -> Check {
    let p = &t.p;
    let mut tally = FloatTally::new("normalized-structure-float", opts.tol);
    if p.n == 0 {
        return tally.finish();
    }
    let big = p.n as i64;
    let a123 = p.a123().to_f64();
    let main = t.qtable(p);
    for second in [false, true] {
        let (cp, low) = if second {
            (p.swapped(), t.qtable(&p.shifted(0, 1, 0, p.n - 1)))
        } else {
            (p.clone(), t.qtable(&p.shifted(1, 0, 0, p.n - 1)))
        };
        let c = NormalizedCoefficients::new(&cp);
        let s = if second { -1.0 } else { 1.0 };
        let lift = (big as f64 * (cp.alpha1.to_f64() + 1.0) / (a123 + 3.0)).sqrt();
        let shift = |i: i64, k: i64| if second { (i, k + 1) } else { (i + 1, k) };
        let tag = if second { 2 } else { 1 };
        for (m, n) in isimplex(p.n) {
            let w = [c.alpha(m, n) * bump(opts), s * c.beta(m, n), c.gamma(m, n), s * c.delta(m, n + 1)];
            for (i, k) in isimplex(p.n - 1) {
                let (si, sk) = shift(i, k);
                let lhs = lift * main.get(m, n, si, sk);
                let g = |a: i64, b: i64| low.get(a, b, i, k);
                let rhs = w[0] * g(m, n) + w[1] * g(m - 1, n) + w[2] * g(m, n - 1) + w[3] * g(m - 1, n + 1);
                tally.record(|| at(&format!("forward-{tag}"), (m, n), (i, k)), lhs, rhs);
            }
        }
        for (m, n) in isimplex(p.n - 1) {
            let w = [c.alpha(m, n), s * c.beta(m + 1, n), c.gamma(m, n + 1), s * c.delta(m + 1, n)];
            for (i, k) in isimplex(p.n) {
                let x = if second { k } else { i };
                let (li, lk) = if second { (i, k - 1) } else { (i - 1, k) };
                let lhs = x as f64 / lift * low.get(m, n, li, lk);
                let f = |a: i64, b: i64| main.get(a, b, i, k);
                let rhs = w[0] * f(m, n) + w[1] * f(m + 1, n) + w[2] * f(m, n + 1) + w[3] * f(m + 1, n - 1);
                tally.record(|| at(&format!("backward-{tag}"), (m, n), (i, k)), lhs, rhs);
            }
        }
    }
    tally.finish()
}

/// `x₁ Q` and `x₂ Q` as combinations of nine neighbouring degrees.
pub(crate) fn recurrence(t: &Tables, opts: &VerifyOptions) -> Check {
    let p = &t.p;
    let mut tally = FloatTally::new("normalized-recurrence-float", opts.tol);
    let main = t.qtable(p);
    for second in [false, true] {
        let c = NormalizedCoefficients::new(&if second { p.swapped() } else { p.clone() });
        let s = if second { -1.0 } else { 1.0 };
        for (m, n) in isimplex(p.n) {
            // (coefficient, degree shift) for the nine neighbours
            let terms = [
                (s * c.rec_a(m + 1, n) * bump(opts), 1, 0),
                (s * c.rec_a(m, n), -1, 0),
                (c.rec_b(m, n + 1), 0, 1),
                (c.rec_b(m, n), 0, -1),
                (s * c.rec_c(m, n + 2), -1, 2),
                (s * c.rec_c(m + 1, n), 1, -2),
                (s * c.rec_d(m + 1, n), 1, -1),
                (s * c.rec_d(m, n + 1), -1, 1),
                (c.rec_e(m, n).to_f64(), 0, 0),
            ];
            for (i, k) in isimplex(p.n) {
                let f = |a: i64, b: i64| main.get(a, b, i, k);
                let x = if second { k } else { i } as f64;
                let rhs: f64 = terms.iter().map(|&(w, dm, dn)| w * f(m + dm, n + dn)).sum();
                let rel = if second { "x2" } else { "x1" };
                tally.record(|| at(rel, (m, n), (i, k)), x * f(m, n), rhs);
            }
        }
    }
    tally.finish()
}

/// The two difference equations, applied to `Q`.
pub(crate) fn difference(t: &Tables, opts: &VerifyOptions) -> Check {
    let p = &t.p;
    let mut tally = FloatTally::new("normalized-difference-float", opts.tol);
    let main = t.qtable(p);
    let (a1, a2) = (p.alpha1.to_f64(), p.alpha2.to_f64());
    let (a12, a123) = (p.a12().to_f64(), p.a123().to_f64());
    let omegas: Vec<Vec<(f64, i64, i64)>> = isimplex(p.n)
        .into_iter()
        .map(|(i, k)| omega(i, k, p).iter().map(|(c, di, dk)| (c.to_f64(), *di, *dk)).collect())
        .collect();
    for (m, n) in isimplex(p.n) {
        for (&(i, k), om) in isimplex(p.n).iter().zip(&omegas) {
            let f = |a: i64, b: i64| main.get(m, n, a, b);
            let u1 = i as f64 * (k as f64 + a2 + 1.0) * bump(opts);
            let u2 = k as f64 * (i as f64 + a1 + 1.0);
            let lhs = (m as f64) * (m as f64 + a12 + 1.0) * f(i, k);
            let rhs = (u1 + u2) * f(i, k) - u1 * f(i - 1, k + 1) - u2 * f(i + 1, k - 1);
            tally.record(|| at("L1", (m, n), (i, k)), lhs, rhs);
            let rhs: f64 = om.iter().map(|&(c, di, dk)| c * (f(i + di, k + dk) - f(i, k))).sum();
            let t = (m + n) as f64;
            tally.record(|| at("L2", (m, n), (i, k)), -t * (t + a123 + 2.0) * f(i, k), rhs);
        }
    }
    tally.finish()
}

/// Raising and lowering between `(α; N)` and `(α₁+1, α₂+1, α₃)` or `(α₁, α₂, α₃+2)`.
pub(crate) fn contiguity(t: &Tables, opts: &VerifyOptions) -> Check {
    let p = &t.p;
    let mut tally = FloatTally::new("normalized-lowering-float", opts.tol);
    let big = p.n as i64;
    let (a1, a2, a3) = (&p.alpha1, &p.alpha2, &p.alpha3);
    let (a12, a123) = (p.a12(), p.a123());
    let (f1, f2, f12) = (a1.to_f64(), a2.to_f64(), a12.to_f64());
    let norm = (&a123 + 3) * (&a123 + 4);
    let main = t.qtable(p);
    let high = t.qtable(&p.with_level(p.n + 1));
    let ab_n = t.qtable(&p.shifted(1, 1, 0, p.n));
    let c_n = t.qtable(&p.shifted(0, 0, 2, p.n));
    if big > 0 {
        let ab = t.qtable(&p.shifted(1, 1, 0, p.n - 1));
        let cc = t.qtable(&p.shifted(0, 0, 2, p.n - 1));
        for (m, n) in isimplex(p.n - 1) {
            let c = root(
                &(ri(big) * (a1 + 1) * (a2 + 1) * (&a123 + (big + 3)) * ri(m + 1) * (&a12 + (m + 2)) / &norm),
            ) * bump(opts);
            let d = root(
                &(ri(big) * (&a123 + (big + 3)) * (a3 + 1) * (a3 + 2) * ri(n + 1) * (a3 + (n + 2))
                    * (&a12 + (n + 2 * m + 2))
                    * (&a123 + (n + 2 * m + 3))
                    / &norm),
            );
            for (i, k) in isimplex(p.n) {
                let (fi, fk) = (i as f64, k as f64);
                let g = |x: i64, y: i64| ab.get(m, n, x, y);
                let rhs = fi * (fk + f2 + 1.0) * g(i - 1, k) - fk * (fi + f1 + 1.0) * g(i, k - 1);
                tally.record(|| at("raise-m", (m, n), (i, k)), c * main.get(m + 1, n, i, k), rhs);
                let h = |x: i64, y: i64| cc.get(m, n, x, y);
                let rhs = lift_n(p, i, k, &h);
                tally.record(|| at("raise-n", (m, n), (i, k)), d * main.get(m, n + 1, i, k), rhs);
            }
        }
    }
    let tail = (a1 + 1) * (a2 + 1) * ri(big + 1) * (&a123 + (big + 4));
    let tail3 = (a3 + 1) * (a3 + 2) * ri(big + 1) * (&a123 + (big + 4));
    for (m, n) in isimplex(p.n + 1) {
        let e = root(&(ri(m) * (&a12 + (m + 1)) * &norm / &tail));
        let f = root(
            &(ri(n) * (a3 + (n + 1)) * (&a12 + (n + 2 * m + 1)) * (&a123 + (n + 2 * m + 2)) * &norm / &tail3),
        );
        for (i, k) in isimplex(p.n) {
            let g = |x: i64, y: i64| high.get(m, n, x, y);
            let lhs = e * ab_n.get(m - 1, n, i, k);
            tally.record(|| at("lower-m", (m, n), (i, k)), lhs, g(i + 1, k) - g(i, k + 1));
            let (fi, fk) = (i as f64, k as f64);
            let rhs = (fi + f1 + 1.0) * g(i + 1, k) + (fk + f2 + 1.0) * g(i, k + 1) + fi * g(i - 1, k)
                + fk * g(i, k - 1)
                - (2.0 * fi + 2.0 * fk + f12 + 2.0) * g(i, k);
            tally.record(|| at("lower-n", (m, n), (i, k)), f * c_n.get(m, n - 1, i, k), rhs);
        }
    }
    tally.finish()
}

/// The five-point operator that raises `n` and `N` together, at level `N`.
fn lift_n(p: &BiParams, i: i64, k: i64, h: &dyn Fn(i64, i64) -> f64) -> f64 {
    let x3 = p.n as i64 - i - k;
    let (fi, fk, f3) = (i as f64, k as f64, x3 as f64);
    let (a1, a2, a3) = (p.alpha1.to_f64(), p.alpha2.to_f64(), p.alpha3.to_f64());
    let up3 = f3 * (f3 - 1.0);
    let dn3 = (f3 + a3 + 1.0) * (f3 + a3 + 2.0);
    (fi + a1 + 1.0) * up3 * h(i + 1, k) + (fk + a2 + 1.0) * up3 * h(i, k + 1) + fi * dn3 * h(i - 1, k)
        + fk * dn3 * h(i, k - 1)
        - f3 * (f3 + a3 + 1.0) * (2.0 * fi + 2.0 * fk + p.a12().to_f64() + 2.0) * h(i, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q;

    fn params() -> Vec<BiParams> {
        let triples = [
            (q(0, 1), q(0, 1), q(0, 1)),
            (q(1, 2), q(-1, 3), q(3, 1)),
            (q(-1, 2), q(-1, 2), q(-1, 2)),
            (q(-3, 4), q(-3, 4), q(-1, 2)),
            (q(-1, 2), q(-1, 2), q(0, 1)),
            (q(7, 3), q(1, 2), q(-1, 2)),
        ];
        triples.into_iter().map(|(a, b, c)| BiParams::new(a, b, c, 5).unwrap()).collect()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * (1.0 + a.abs().max(b.abs()))
    }

    #[test]
    fn explicit_coefficients_are_products() {
        for p in params() {
            let c = NormalizedCoefficients::new(&p);
            // the recurrence reads these coefficients only at m + n ≤ N + 2
            let reach = p.n as i64 + 2;
            for m in -1..=reach {
                for n in -1..=reach - m {
                    assert_eq!(c.rec_a_sq(m, n), c.alpha_sq(m - 1, n) * c.beta_sq(m, n), "A {m} {n}");
                    assert_eq!(c.rec_c_sq(m, n), c.gamma_sq(m - 1, n) * c.delta_sq(m, n - 1), "C {m} {n}");
                    if m >= 0 && n >= 0 && m + n <= p.n as i64 {
                        let e = c.alpha_sq(m, n) + c.beta_sq(m, n) + c.gamma_sq(m, n) + c.delta_sq(m, n + 1);
                        assert_eq!(c.rec_e(m, n), e, "E {m} {n}");
                    }
                    if m + n > reach - 1 {
                        continue;
                    }
                    let b = c.alpha(m, n - 1) * c.gamma(m, n) + c.beta(m, n) * c.delta(m, n);
                    assert!(close(c.rec_b(m, n), b), "B {m} {n}: {} vs {b}", c.rec_b(m, n));
                    let d = c.alpha(m - 1, n) * c.delta(m, n) + c.beta(m, n - 1) * c.gamma(m - 1, n);
                    assert!(close(c.rec_d(m, n), d), "D {m} {n}: {} vs {d}", c.rec_d(m, n));
                }
            }
        }
    }

    #[test]
    fn relations_hold_at_small_levels() {
        let opts = VerifyOptions::default();
        for p in params() {
            for level in 0..=4 {
                let p = p.with_level(level);
                let t = Tables::new(&p);
                for check in [structure(&t, &opts), recurrence(&t, &opts), difference(&t, &opts), contiguity(&t, &opts)] {
                    assert!(check.passed(), "{} {}: {:?}", check.name, p.label(), check.counterexample);
                }
            }
        }
    }

    #[test]
    fn perturbation_is_detected() {
        let opts = VerifyOptions { perturb: true, ..VerifyOptions::default() };
        let p = BiParams::new(q(1, 2), q(0, 1), q(3, 1), 3).unwrap();
        assert!(!structure(&Tables::new(&p), &opts).passed());
        assert!(!recurrence(&Tables::new(&p), &opts).passed());
        assert!(!difference(&Tables::new(&p), &opts).passed());
        assert!(!contiguity(&Tables::new(&p), &opts).passed());
    }
}
