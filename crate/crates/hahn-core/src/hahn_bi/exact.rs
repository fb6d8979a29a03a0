//! Exact identities of the unnormalized family `P`, all with rational coefficients.

use super::{lambda2_raw, simplex, weight2_raw, Tables};
use crate::numeric::{factorial, multinomial, ratio_or, Rational};
use crate::report::{Check, ExactTally};
use crate::VerifyOptions;

fn ri(x: i64) -> Rational {
    Rational::integer(x)
}

/// Multiplier applied to one coefficient under fault injection.
fn bump(opts: &VerifyOptions) -> Rational {
    if opts.perturb {
        Rational::new(1001, 1000)
    } else {
        Rational::one()
    }
}

fn at(d: (i64, i64), g: (i64, i64)) -> String {
    format!("degree ({},{}) point ({},{})", d.0, d.1, g.0, g.1)
}

fn isimplex(level: usize) -> Vec<(i64, i64)> {
    simplex(level).into_iter().map(|(a, b)| (a as i64, b as i64)).collect()
}

pub fn orthogonality(t: &Tables, opts: &VerifyOptions) -> Check {
    let p = &t.p;
    let pts = simplex(p.n);
    let degs = isimplex(p.n);
    let w: Vec<Rational> = pts.iter().map(|&(i, k)| weight2_raw(i, k, p)).collect();
    let cols: Vec<Vec<&Rational>> = degs
        .iter()
        .map(|&(m, n)| pts.iter().map(|&(i, k)| t.main.get(m, n, i as i64, k as i64)).collect())
        .collect();
    let mut tally = ExactTally::new("orthogonality");
    let mut diag = Vec::with_capacity(degs.len());
    for a in 0..degs.len() {
        let weighted: Vec<Rational> = w.iter().zip(&cols[a]).map(|(x, y)| x * *y).collect();
        for b in a..degs.len() {
            let s: Rational = weighted
                .iter()
                .zip(&cols[b])
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .map(|(x, y)| x * *y)
                .sum();
            let expect = if a == b {
                diag.push(s.to_string());
                lambda2_raw(degs[a].0 as usize, degs[a].1 as usize, p) * bump(opts)
            } else {
                Rational::zero()
            };
            tally.record(|| format!("degrees {:?} {:?}", degs[a], degs[b]), &s, &expect);
        }
    }
    tally.finish().with_data(diag)
}

/// `P^{(α₁,α₂,α₃)}_{m,n}(i,k) = (−1)^m P^{(α₂,α₁,α₃)}_{m,n}(k,i)`.
pub fn symmetry(t: &Tables, opts: &VerifyOptions) -> Check {
    let swapped = t.ptable(&t.p.swapped());
    let mut tally = ExactTally::new("symmetry");
    for (m, n) in isimplex(t.p.n) {
        let sign = if m % 2 == 0 { ri(1) } else { ri(-1) } * bump(opts);
        for (i, k) in isimplex(t.p.n) {
            tally.record(|| at((m, n), (i, k)), t.main.get(m, n, i, k), &(swapped.get(m, n, k, i) * &sign));
        }
    }
    tally.finish()
}

/// Coefficients of the three-term-in-each-direction recurrence for `x₁ P`.
pub struct RecCoeffs {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub f: Rational,
    pub g: Rational,
    pub h: Rational,
    pub i: Rational,
}

/// Removable singularities are resolved by their limits: `(n₁+α₁₂+1)/(2n₁+α₁₂+1) → 1`,
/// `(2n₁+n₂+α₁₂₃+2)/(2n₁+2n₂+α₁₂₃+2) → 1`, and the ratio
/// `[2n₁²+2n₁(α₁₂+1)+(α₁+1)α₁₂]/(2n₁+α₁₂)` is split as `(n₁+α₁+1) + n₁(α₂−α₁)/(2n₁+α₁₂)`.
pub fn rec_coeffs(n1: i64, n2: i64, p: &super::BiParams) -> RecCoeffs {
    let (a1, a2, a3) = (&p.alpha1, &p.alpha2, &p.alpha3);
    let (a12, a123) = (p.a12(), p.a123());
    let big = p.n as i64;
    let s = |x: i64, base: &Rational| base + x;
    let r1 = ratio_or(s(n1 + 1, &a12), &s(2 * n1 + 1, &a12), Rational::one());
    let r2 = ratio_or(s(2 * n1 + n2 + 2, &a123), &s(2 * n1 + 2 * n2 + 2, &a123), Rational::one());
    let qd = s(n1 + 1, a1) + if n1 > 0 { ri(n1) * (a2 - a1) / s(2 * n1, &a12) } else { Rational::zero() };
    let t1 = s(2 * n1 + 2, &a12);
    let t0 = s(2 * n1, &a12) * s(2 * n1 + 1, &a12);
    let d3 = s(2 * n1 + 2 * n2 + 3, &a123);
    let d12 = s(2 * n1 + 2 * n2 + 2, &a123) * &d3;
    let d01 = s(2 * n1 + 2 * n2 + 1, &a123) * &d3;
    let d02 = s(2 * n1 + 2 * n2 + 1, &a123) * s(2 * n1 + 2 * n2 + 2, &a123);
    let top = s(big + n1 + n2 + 2, &a123);
    let span = ri(n1 + n2 - big);
    let m1 = ri(n1) * s(n1, a1) * s(n1, a2);
    let z = Rational::zero;

    let a = &r1 * &r2 * s(2 * n1 + n2 + 3, &a123) * &span / (&t1 * &d3);
    let b = &r2 * &qd * &span / (&t1 * &d3);
    let c = if n1 > 0 { &m1 * &span / (&t0 * &d12) } else { z() };
    let d = if n1 > 0 {
        &m1 * s(2 * n1 + n2 + 1, &a12) * s(2 * big + 3, &a123) / (&t0 * &d01)
    } else {
        z()
    };
    let f = if n2 > 0 {
        ri(n2) * s(n2, a3) * &r1 * s(2 * n1 + n2 + 2, &a123) * s(2 * big + 3, &a123) / (&t1 * &d01)
    } else {
        z()
    };
    let g = if n2 > 1 {
        ri(n2 * (n2 - 1)) * s(n2, a3) * s(n2 - 1, a3) * &r1 * &top / (&t1 * &d02)
    } else {
        z()
    };
    let h = if n2 > 0 {
        ri(n2) * s(n2, a3) * &qd * s(2 * n1 + n2 + 1, &a12) * &top / (&t1 * &d02)
    } else {
        z()
    };
    let i = if n1 > 0 {
        &m1 * s(2 * n1 + n2, &a12) * s(2 * n1 + n2 + 1, &a12) * &top / (&t0 * &d02)
    } else {
        z()
    };
    let e1 = if n2 > 0 { ri(n2) * s(n1 + 1, a1) * &r1 * s(n2, a3) * &top / (&t1 * &d02) } else { z() };
    let e2 = if n1 > 0 {
        ri(n1) * s(n1, a2) * ri(n2 + 1) * s(n2 + 1, a3) * ri(big - n1 - n2) / (&t0 * &d12)
    } else {
        z()
    };
    let e3 = if n1 > 0 {
        ri(n1) * s(n1, a2) * s(2 * n1 + n2 + 1, &a12) * s(2 * n1 + n2 + 1, &a123) * &top / (&t0 * &d02)
    } else {
        z()
    };
    let e4 = s(n1 + 1, a1) * &r1 * &r2 * s(2 * n1 + n2 + 2, &a12) * ri(big - n1 - n2) / (&t1 * &d3);
    RecCoeffs { a, b, c, d, e: e1 + e2 + e3 + e4, f, g, h, i }
}

/// `x₁ P` (or `x₂ P`) as a combination of nine neighbouring degrees; the `x₂`
/// version uses the coefficients with `α₁ ↔ α₂` and flips the sign of the terms
/// whose first degree changes by an odd amount.
pub fn recurrence(t: &Tables, opts: &VerifyOptions, second: bool) -> Check {
    let name = if second { "recurrence-x2" } else { "recurrence-x1" };
    let cp = if second { t.p.swapped() } else { t.p.clone() };
    let sg = if second { ri(-1) } else { ri(1) };
    let mut tally = ExactTally::new(name);
    for (n1, n2) in isimplex(t.p.n) {
        let c = rec_coeffs(n1, n2, &cp);
        let a = &c.a * bump(opts);
        for (x1, x2) in isimplex(t.p.n) {
            let f = |m: i64, n: i64| t.main.get(m, n, x1, x2);
            let x = if second { x2 } else { x1 };
            let lhs = ri(x) * f(n1, n2);
            let rhs = &sg * &a * f(n1 + 1, n2) + &c.b * f(n1, n2 + 1) + &sg * &c.c * f(n1 - 1, n2 + 2)
                + &sg * &c.d * f(n1 - 1, n2 + 1)
                + &c.e * f(n1, n2)
                + &sg * &c.f * f(n1 + 1, n2 - 1)
                - &sg * &c.g * f(n1 + 1, n2 - 2)
                - &c.h * f(n1, n2 - 1)
                - &sg * &c.i * f(n1 - 1, n2);
            tally.record(|| at((n1, n2), (x1, x2)), &lhs, &rhs);
        }
    }
    tally.finish()
}

/// `𝓛₁ P = −m(m+α₁₂+1) P` with `𝓛₁ = Υ₁(T_i⁻T_k⁺ − 1) + Υ₂(T_i⁺T_k⁻ − 1)`.
pub fn diff_l1(t: &Tables, opts: &VerifyOptions) -> Check {
    let (a1, a2) = (&t.p.alpha1, &t.p.alpha2);
    let a12 = t.p.a12();
    let mut tally = ExactTally::new("diff-L1");
    for (m, n) in isimplex(t.p.n) {
        let ev = -(ri(m) * (&a12 + (m + 1)));
        for (i, k) in isimplex(t.p.n) {
            let f = |x: i64, y: i64| t.main.get(m, n, x, y);
            let u1 = ri(i) * (a2 + (k + 1)) * bump(opts);
            let u2 = ri(k) * (a1 + (i + 1));
            let lhs = &u1 * f(i - 1, k + 1) + &u2 * f(i + 1, k - 1) - (&u1 + &u2) * f(i, k);
            tally.record(|| at((m, n), (i, k)), &lhs, &(&ev * f(i, k)));
        }
    }
    tally.finish()
}

/// The six shift coefficients `Ω₁…Ω₆` of `𝓛₂` with their shifts `(Δi, Δk)`.
pub fn omega(i: i64, k: i64, p: &super::BiParams) -> [(Rational, i64, i64); 6] {
    let x3 = p.n as i64 - i - k;
    let (a1, a2, a3) = (&p.alpha1, &p.alpha2, &p.alpha3);
    [
        ((a1 + (i + 1)) * ri(x3), 1, 0),
        ((a2 + (k + 1)) * ri(x3), 0, 1),
        (ri(i) * (a3 + (x3 + 1)), -1, 0),
        (ri(k) * (a3 + (x3 + 1)), 0, -1),
        (ri(k) * (a1 + (i + 1)), 1, -1),
        (ri(i) * (a2 + (k + 1)), -1, 1),
    ]
}

/// `𝓛₂ P = −(m+n)(m+n+α₁₂₃+2) P`.
pub fn diff_l2(t: &Tables, opts: &VerifyOptions) -> Check {
    let a123 = t.p.a123();
    let mut tally = ExactTally::new("diff-L2");
    for (m, n) in isimplex(t.p.n) {
        let ev = -(ri(m + n) * (&a123 + (m + n + 2)));
        for (i, k) in isimplex(t.p.n) {
            let f = |x: i64, y: i64| t.main.get(m, n, x, y);
            let mut om = omega(i, k, &t.p);
            om[0].0 *= bump(opts);
            let mut lhs = Rational::zero();
            for (c, di, dk) in &om {
                lhs += c * (f(i + di, k + dk) - f(i, k));
            }
            tally.record(|| at((m, n), (i, k)), &lhs, &(&ev * f(i, k)));
        }
    }
    tally.finish()
}

/// `−N P_{m+1,n} = x₁(x₂+α₂+1) P'_{m,n}(x₁−1,x₂) − x₂(x₁+α₁+1) P'_{m,n}(x₁,x₂−1)`,
/// `P'` at `(α₁+1, α₂+1, α₃; N−1)`.
pub fn forward_shift_m(t: &Tables, opts: &VerifyOptions) -> Check {
    let mut tally = ExactTally::new("forward-shift-m");
    let big = t.p.n as i64;
    if big == 0 {
        return tally.finish();
    }
    let (a1, a2) = (&t.p.alpha1, &t.p.alpha2);
    let low = t.ptable(&t.p.shifted(1, 1, 0, t.p.n - 1));
    for (m, n) in isimplex(t.p.n) {
        for (x1, x2) in isimplex(t.p.n) {
            let lhs = ri(-big) * t.main.get(m + 1, n, x1, x2);
            let rhs = ri(x1) * (a2 + (x2 + 1)) * low.get(m, n, x1 - 1, x2) * bump(opts)
                - ri(x2) * (a1 + (x1 + 1)) * low.get(m, n, x1, x2 - 1);
            tally.record(|| at((m, n), (x1, x2)), &lhs, &rhs);
        }
    }
    tally.finish()
}

/// Raises `n` with `P''` at `(α₁, α₂, α₃+2; N−1)`.
pub fn forward_shift_n(t: &Tables, opts: &VerifyOptions) -> Check {
    let mut tally = ExactTally::new("forward-shift-n");
    let big = t.p.n as i64;
    if big == 0 {
        return tally.finish();
    }
    let (a1, a2, a3) = (&t.p.alpha1, &t.p.alpha2, &t.p.alpha3);
    let a12 = t.p.a12();
    let low = t.ptable(&t.p.shifted(0, 0, 2, t.p.n - 1));
    for (m, n) in isimplex(t.p.n) {
        for (x1, x2) in isimplex(t.p.n) {
            let x3 = big - x1 - x2;
            let g = |i: i64, k: i64| low.get(m, n, i, k);
            let lhs = ri(-big) * (a3 + (n + 2)) * t.main.get(m, n + 1, x1, x2);
            let up3 = ri(x3 * (x3 - 1));
            let dn3 = (a3 + (x3 + 1)) * (a3 + (x3 + 2));
            let rhs = (a1 + (x1 + 1)) * &up3 * g(x1 + 1, x2) * bump(opts)
                + (a2 + (x2 + 1)) * &up3 * g(x1, x2 + 1)
                + ri(x1) * &dn3 * g(x1 - 1, x2)
                + ri(x2) * &dn3 * g(x1, x2 - 1)
                - ri(x3) * (a3 + (x3 + 1)) * (&a12 + (2 * x1 + 2 * x2 + 2)) * g(x1, x2);
            tally.record(|| at((m, n), (x1, x2)), &lhs, &rhs);
        }
    }
    tally.finish()
}

/// `−m(m+α₁₂+1)/(N+1) P'_{m−1,n}(x) = P⁺_{m,n}(x₁+1,x₂) − P⁺_{m,n}(x₁,x₂+1)`,
/// `P'` at `(α₁+1, α₂+1, α₃; N)`, `P⁺` at level `N+1`.
pub fn backward_shift_m(t: &Tables, opts: &VerifyOptions) -> Check {
    let mut tally = ExactTally::new("backward-shift-m");
    let big = t.p.n as i64;
    let a12 = t.p.a12();
    let low = t.ptable(&t.p.shifted(1, 1, 0, t.p.n));
    let high = t.ptable(&t.p.with_level(t.p.n + 1));
    for (m, n) in isimplex(t.p.n + 1) {
        let c = -(ri(m) * (&a12 + (m + 1))) / ri(big + 1) * bump(opts);
        for (x1, x2) in isimplex(t.p.n) {
            let lhs = &c * low.get(m - 1, n, x1, x2);
            let rhs = high.get(m, n, x1 + 1, x2) - high.get(m, n, x1, x2 + 1);
            tally.record(|| at((m, n), (x1, x2)), &lhs, &rhs);
        }
    }
    tally.finish()
}

/// Lowers `n` with `P''` at `(α₁, α₂, α₃+2; N)` and `P⁺` at level `N+1`.
pub fn backward_shift_n(t: &Tables, opts: &VerifyOptions) -> Check {
    let mut tally = ExactTally::new("backward-shift-n");
    let big = t.p.n as i64;
    let (a1, a2) = (&t.p.alpha1, &t.p.alpha2);
    let (a12, a123) = (t.p.a12(), t.p.a123());
    let low = t.ptable(&t.p.shifted(0, 0, 2, t.p.n));
    let high = t.ptable(&t.p.with_level(t.p.n + 1));
    for (m, n) in isimplex(t.p.n + 1) {
        let c = -(ri(n) * (&a12 + (2 * m + n + 1)) * (&a123 + (2 * m + n + 2))) / ri(big + 1) * bump(opts);
        for (x1, x2) in isimplex(t.p.n) {
            let h = |i: i64, k: i64| high.get(m, n, i, k);
            let lhs = &c * low.get(m, n - 1, x1, x2);
            let rhs = (a1 + (x1 + 1)) * h(x1 + 1, x2)
                + ri(x1) * h(x1 - 1, x2)
                + (a2 + (x2 + 1)) * h(x1, x2 + 1)
                + ri(x2) * h(x1, x2 - 1)
                - (&a12 + (2 * x1 + 2 * x2 + 2)) * h(x1, x2);
            tally.record(|| at((m, n), (x1, x2)), &lhs, &rhs);
        }
    }
    tally.finish()
}

/// The four relations between level `N` at `α` and level `N−1` at `α₁+1` or `α₂+1`:
/// two expressing `N P(x+eⱼ)` through lower-level polynomials, two expressing
/// `xⱼ/N P'(x−eⱼ)` through level-`N` polynomials.
pub fn structure(t: &Tables, opts: &VerifyOptions) -> Check {
    let mut tally = ExactTally::new("structure");
    let big = t.p.n as i64;
    if big == 0 {
        return tally.finish();
    }
    let (a1, a2, a3) = (&t.p.alpha1, &t.p.alpha2, &t.p.alpha3);
    let (a12, a123) = (t.p.a12(), t.p.a123());
    let lo1 = t.ptable(&t.p.shifted(1, 0, 0, t.p.n - 1));
    let lo2 = t.ptable(&t.p.shifted(0, 1, 0, t.p.n - 1));
    let z = Rational::zero;
    for (n1, n2) in isimplex(t.p.n) {
        let den = (&a12 + (2 * n1 + 1)) * (&a123 + (2 * n1 + 2 * n2 + 2));
        let r1 = ratio_or(&a12 + (n1 + 1), &(&a12 + (2 * n1 + 1)), Rational::one());
        let r2 = ratio_or(&a123 + (2 * n1 + n2 + 2), &(&a123 + (2 * n1 + 2 * n2 + 2)), Rational::one());
        let a = &r1 * &r2 * ri(big - n1 - n2) * bump(opts);
        let top = &a123 + (big + n1 + n2 + 2);
        let b1 = if n1 > 0 { ri(n1) * (a2 + n1) * (&a12 + (2 * n1 + n2 + 1)) * &top / &den } else { z() };
        let b2 = if n1 > 0 { ri(n1) * (a1 + n1) * (&a12 + (2 * n1 + n2 + 1)) * &top / &den } else { z() };
        let c = if n2 > 0 { ri(n2) * (a3 + n2) * &r1 * &top / (&a123 + (2 * n1 + 2 * n2 + 2)) } else { z() };
        let d1 = if n1 > 0 { ri(n1) * (a2 + n1) * ri(big - n1 - n2) / &den } else { z() };
        let d2 = if n1 > 0 { ri(n1) * (a1 + n1) * ri(big - n1 - n2) / &den } else { z() };
        for (x1, x2) in isimplex(t.p.n - 1) {
            let g1 = |m: i64, n: i64| lo1.get(m, n, x1, x2);
            let g2 = |m: i64, n: i64| lo2.get(m, n, x1, x2);
            let lhs = ri(big) * t.main.get(n1, n2, x1 + 1, x2);
            let rhs = &a * g1(n1, n2) - &b1 * g1(n1 - 1, n2) - &c * g1(n1, n2 - 1) + &d1 * g1(n1 - 1, n2 + 1);
            tally.record(|| format!("x1-raise {}", at((n1, n2), (x1, x2))), &lhs, &rhs);
            let lhs = ri(big) * t.main.get(n1, n2, x1, x2 + 1);
            let rhs = &a * g2(n1, n2) + &b2 * g2(n1 - 1, n2) - &c * g2(n1, n2 - 1) - &d2 * g2(n1 - 1, n2 + 1);
            tally.record(|| format!("x2-raise {}", at((n1, n2), (x1, x2))), &lhs, &rhs);
        }
    }
    for (n1, n2) in isimplex(t.p.n - 1) {
        let den = (&a12 + (2 * n1 + 2)) * (&a123 + (2 * n1 + 2 * n2 + 3));
        let mid = &a12 + (2 * n1 + n2 + 2);
        let up = (&a123 + (2 * n1 + n2 + 3)) / &den;
        let side = ri(n2) * (a3 + n2) / &den;
        for (x1, x2) in isimplex(t.p.n) {
            let f = |m: i64, n: i64| t.main.get(m, n, x1, x2);
            let c1 = (a1 + (n1 + 1)) / &den;
            let lhs = ri(x1) / ri(big) * lo1.get(n1, n2, x1 - 1, x2);
            let rhs = &c1 * &mid * f(n1, n2) - &up * f(n1 + 1, n2) - &c1 * f(n1, n2 + 1) + &side * f(n1 + 1, n2 - 1);
            tally.record(|| format!("x1-lower {}", at((n1, n2), (x1, x2))), &lhs, &rhs);
            let c2 = (a2 + (n1 + 1)) / &den;
            let lhs = ri(x2) / ri(big) * lo2.get(n1, n2, x1, x2 - 1);
            let rhs = &c2 * &mid * f(n1, n2) + &up * f(n1 + 1, n2) - &c2 * f(n1, n2 + 1) - &side * f(n1 + 1, n2 - 1);
            tally.record(|| format!("x2-lower {}", at((n1, n2), (x1, x2))), &lhs, &rhs);
        }
    }
    tally.finish()
}

/// [`super::genfun_polynomial`] against `Σ N!/(x₁!x₂!x₃!) H_{m,n}(x) z₁^{x₁} z₂^{x₂}`.
pub fn genfun(t: &Tables, opts: &VerifyOptions) -> Check {
    let mut tally = ExactTally::new("genfun");
    let big = t.p.n;
    for (m, n) in simplex(big) {
        let lhs = super::genfun_polynomial(m, n, &t.p);
        let scale = bump(opts) / (factorial(m) * factorial(n));
        for x1 in 0..=big {
            for x2 in 0..=big {
                let rhs = if x1 + x2 <= big {
                    multinomial(big, &[x1, x2]).expect("on simplex")
                        * t.main.get(m as i64, n as i64, x1 as i64, x2 as i64)
                        * &scale
                } else {
                    Rational::zero()
                };
                tally.record(
                    || format!("degree ({m},{n}) z1^{x1} z2^{x2}"),
                    &lhs.coeff(x1, x2),
                    &rhs,
                );
            }
        }
    }
    tally.finish()
}
