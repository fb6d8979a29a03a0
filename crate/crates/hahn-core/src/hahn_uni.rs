//! Univariate Hahn polynomials `h_n(x; α, β; N)`.
//!
//! Normalization: `h_n = (α+1)_n (−N)_n ₃F₂(−n, n+α+β+1, −x; α+1, −N; 1)`, so that
//! `Σ_x ρ(x) h_n(x) h_m(x) = λ_n δ_{nm}` with `ρ` the hypergeometric distribution.

use serde::Serialize;

use crate::classical::jacobi_coeffs;
use crate::error::Error;
use crate::numeric::{binomial, factorial, pochhammer, pochhammer_int, BiPoly, Rational};
use crate::report::{Check, ExactTally, VerificationReport};

/// `(α, β; N)` with `α, β > −1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub n: usize,
}

pub(crate) fn check_parameter(name: &str, v: &Rational) -> Result<(), Error> {
    if *v > -1 {
        Ok(())
    } else {
        Err(Error::Parameter { name: name.to_string(), value: v.to_string() })
    }
}

impl UniParams {
    pub fn new(alpha: Rational, beta: Rational, n: usize) -> Result<Self, Error> {
        check_parameter("alpha", &alpha)?;
        check_parameter("beta", &beta)?;
        Ok(UniParams { alpha, beta, n })
    }
}

/// `h_n(x; α, β; N)` for any rational `x` and any integer `N`.
///
/// Uses the division-free expansion
/// `Σ_j (−n)_j (n+α+β+1)_j (−x)_j / j! · (α+1+j)_{n−j} (j−N)_{n−j}`,
/// which equals the `₃F₂` form whenever `0 ≤ n ≤ N` and extends it polynomially
/// in `x` and `N` (including `N < n`, where the polynomial vanishes on `0 ≤ x ≤ N`).
pub fn hahn_poly(n: usize, x: &Rational, alpha: &Rational, beta: &Rational, level: i64) -> Rational {
    let top = alpha + beta + Rational::from(n + 1);
    let alpha1 = alpha + Rational::one();
    // suffix[j] = (j−N)_{n−j} · (α+1+j)_{n−j}
    let mut suffix = vec![Rational::one(); n + 1];
    for j in (0..n).rev() {
        suffix[j] = &suffix[j + 1] * &(Rational::integer(j as i64 - level) * (&alpha1 + Rational::from(j)));
    }
    // head = (−n)_j (top)_j (−x)_j / j!, zero from its first vanishing factor on
    let mut head = Rational::one();
    let mut sum = Rational::zero();
    for (j, tail) in suffix.iter().enumerate() {
        if head.is_zero() {
            break;
        }
        if !tail.is_zero() {
            sum += &head * tail;
        }
        let jr = Rational::from(j);
        head *= Rational::integer(j as i64 - n as i64) * (&top + &jr) * (&jr - x) / Rational::from(j + 1);
    }
    sum
}

/// `h_n(x; α, β; N)` on integer points.
pub fn hahn_eval(n: usize, x: i64, p: &UniParams) -> Result<Rational, Error> {
    if n > p.n {
        return Err(Error::DegreeOutOfRange { n, level: p.n });
    }
    Ok(hahn_poly(n, &Rational::integer(x), &p.alpha, &p.beta, p.n as i64))
}

/// `ρ(x) = C(N,x) (α+1)_x (β+1)_{N−x} / (α+β+2)_N` without range checks.
pub fn rho(x: usize, alpha: &Rational, beta: &Rational, level: usize) -> Rational {
    binomial(level, x) * pochhammer(&(alpha + 1), x) * pochhammer(&(beta + 1), level - x)
        / pochhammer(&(alpha + beta + 2), level)
}

pub fn hahn_weight(x: usize, p: &UniParams) -> Result<Rational, Error> {
    if x > p.n {
        return Err(Error::OffSimplex(format!("x={x} with N={}", p.n)));
    }
    Ok(rho(x, &p.alpha, &p.beta, p.n))
}

/// `λ_n = Σ_x ρ h_n²` in closed form:
/// `N! n!/(N−n)! · (α+1)_n (β+1)_n (N+α+β+2)_n / [(2n+α+β+1)(α+β+2)_{n−1}]`, `λ_0 = 1`.
pub fn lambda(n: usize, alpha: &Rational, beta: &Rational, level: usize) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let s = alpha + beta;
    factorial(level) * factorial(n) / factorial(level - n)
        * pochhammer(&(alpha + 1), n)
        * pochhammer(&(beta + 1), n)
        * pochhammer(&(&s + Rational::from(level + 2)), n)
        / ((&s + Rational::from(2 * n + 1)) * pochhammer(&(&s + 2), n - 1))
}

pub fn hahn_norm(n: usize, p: &UniParams) -> Result<Rational, Error> {
    if n > p.n {
        return Err(Error::DegreeOutOfRange { n, level: p.n });
    }
    Ok(lambda(n, &p.alpha, &p.beta, p.n))
}

pub const UNI_CHECKS: [&str; 3] = ["orthogonality", "genfun", "dual-genfun"];

fn values(p: &UniParams) -> Vec<Vec<Rational>> {
    (0..=p.n)
        .map(|n| (0..=p.n).map(|x| hahn_poly(n, &Rational::from(x), &p.alpha, &p.beta, p.n as i64)).collect())
        .collect()
}

fn check_orthogonality(p: &UniParams) -> Check {
    let h = values(p);
    let w: Vec<Rational> = (0..=p.n).map(|x| rho(x, &p.alpha, &p.beta, p.n)).collect();
    let mut tally = ExactTally::new("orthogonality");
    let mut diag = Vec::new();
    for n in 0..=p.n {
        for m in n..=p.n {
            let s: Rational = (0..=p.n).map(|x| &w[x] * &h[n][x] * &h[m][x]).sum();
            let expect = if n == m { lambda(n, &p.alpha, &p.beta, p.n) } else { Rational::zero() };
            if n == m {
                diag.push(s.to_string());
            }
            tally.record(|| format!("n={n} m={m}"), &s, &expect);
        }
    }
    tally.finish().with_data(diag)
}

/// `₁F₁(−x; α+1; −t) ₁F₁(x−N; β+1; t)` as a polynomial in `t` (the first variable).
pub fn genfun_series(x: usize, p: &UniParams) -> BiPoly {
    let t = BiPoly::z1();
    let mut f1 = BiPoly::zero();
    for j in 0..=x {
        let c = pochhammer_int(-(x as i64), j) / (pochhammer(&(&p.alpha + 1), j) * factorial(j))
            * Rational::integer(if j % 2 == 0 { 1 } else { -1 });
        f1 = &f1 + &t.pow(j).scale(&c);
    }
    let mut f2 = BiPoly::zero();
    for j in 0..=p.n - x {
        let c = pochhammer_int(x as i64 - p.n as i64, j) / (pochhammer(&(&p.beta + 1), j) * factorial(j));
        f2 = &f2 + &t.pow(j).scale(&c);
    }
    &f1 * &f2
}

/// `(−N)_n n! (1+t)^{N−n} · (1+t)ⁿ P_n^{(α,β)}((1−t)/(1+t))` as a polynomial in `t`.
pub fn dual_genfun_polynomial(n: usize, p: &UniParams) -> BiPoly {
    let one = BiPoly::one();
    let t = BiPoly::z1();
    let one_plus = &one + &t;
    let one_minus = &one - &t;
    let jac = jacobi_coeffs(n, &p.alpha, &p.beta).homogenize(&one_minus, &one_plus, n);
    let pref = pochhammer_int(-(p.n as i64), n) * factorial(n);
    (&one_plus.pow(p.n - n) * &jac).scale(&pref)
}

/// `Σ_n h_n(x) tⁿ / ((α+1)_n (β+1)_n n!)` against [`genfun_series`].
fn check_genfun(p: &UniParams) -> Check {
    let mut tally = ExactTally::new("genfun");
    for x in 0..=p.n {
        let lhs = genfun_series(x, p);
        for n in 0..=p.n {
            let rhs = hahn_poly(n, &Rational::from(x), &p.alpha, &p.beta, p.n as i64)
                / (pochhammer(&(&p.alpha + 1), n) * pochhammer(&(&p.beta + 1), n) * factorial(n));
            tally.record(|| format!("x={x} t^{n}"), &lhs.coeff(n, 0), &rhs);
        }
    }
    tally.finish()
}

/// [`dual_genfun_polynomial`] against `Σ_x C(N,x) h_n(x) tˣ`.
fn check_dual_genfun(p: &UniParams) -> Check {
    let mut tally = ExactTally::new("dual-genfun");
    for n in 0..=p.n {
        let lhs = dual_genfun_polynomial(n, p);
        for x in 0..=p.n {
            let rhs = binomial(p.n, x) * hahn_poly(n, &Rational::from(x), &p.alpha, &p.beta, p.n as i64);
            tally.record(|| format!("n={n} t^{x}"), &lhs.coeff(x, 0), &rhs);
        }
    }
    tally.finish()
}

/// Runs one named check, or every check when `check` is `None`.
pub fn verify_uni(check: Option<&str>, p: &UniParams) -> Result<VerificationReport, Error> {
    let names: Vec<&str> = match check {
        Some(c) if UNI_CHECKS.contains(&c) => vec![c],
        Some(c) => return Err(Error::UnknownCheck(c.to_string())),
        None => UNI_CHECKS.to_vec(),
    };
    let checks = names
        .into_iter()
        .map(|c| match c {
            "orthogonality" => check_orthogonality(p),
            "genfun" => check_genfun(p),
            _ => check_dual_genfun(p),
        })
        .collect();
    Ok(VerificationReport::new("uni", format!("alpha={} beta={} N={}", p.alpha, p.beta, p.n), checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{pfq_terminating, q};

    fn up(a: Rational, b: Rational, n: usize) -> UniParams {
        UniParams::new(a, b, n).unwrap()
    }

    #[test]
    fn low_degree_values() {
        let p = up(q(0, 1), q(0, 1), 2);
        assert_eq!(hahn_eval(0, 1, &p).unwrap(), q(1, 1));
        assert_eq!(hahn_eval(1, 2, &p).unwrap(), q(2, 1));
        assert_eq!(hahn_eval(2, 1, &p).unwrap(), q(-8, 1));
        let (a, b, n) = (q(1, 2), q(7, 3), 5usize);
        let p = up(a.clone(), b.clone(), n);
        for x in 0..=5 {
            let expect = (&a + &b + 2) * Rational::integer(x) - Rational::from(n) * (&a + 1);
            assert_eq!(hahn_eval(1, x, &p).unwrap(), expect);
        }
    }

    #[test]
    fn degree_above_level_rejected() {
        assert!(hahn_eval(3, 0, &up(q(0, 1), q(0, 1), 2)).is_err());
        assert!(hahn_norm(3, &up(q(0, 1), q(0, 1), 2)).is_err());
    }

    #[test]
    fn parameters_must_exceed_minus_one() {
        assert!(UniParams::new(q(-1, 1), q(0, 1), 2).is_err());
        assert!(UniParams::new(q(0, 1), q(-3, 2), 2).is_err());
    }

    #[test]
    fn matches_hypergeometric_form() {
        for (a, b) in [(q(0, 1), q(0, 1)), (q(1, 2), q(7, 3)), (q(-1, 2), q(-1, 2))] {
            for level in 0..=6usize {
                for n in 0..=level {
                    for x in 0..=level {
                        let nl = level as i64;
                        let f = pfq_terminating(
                            &[Rational::integer(-(n as i64)), &a + &b + Rational::from(n + 1), Rational::integer(-(x as i64))],
                            &[&a + 1, Rational::integer(-nl)],
                            &Rational::one(),
                        )
                        .unwrap();
                        let expect = pochhammer(&(&a + 1), n) * pochhammer_int(-nl, n) * f;
                        assert_eq!(hahn_poly(n, &Rational::from(x), &a, &b, nl), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn weight_values() {
        let p = up(q(0, 1), q(0, 1), 2);
        for x in 0..=2 {
            assert_eq!(hahn_weight(x, &p).unwrap(), q(1, 3));
        }
        assert!(hahn_weight(3, &p).is_err());
        let (a, b) = (q(1, 2), q(7, 3));
        let p = up(a.clone(), b.clone(), 5);
        assert_eq!(hahn_weight(0, &p).unwrap(), pochhammer(&(&b + 1), 5) / pochhammer(&(&a + &b + 2), 5));
        let total: Rational = (0..=5).map(|x| hahn_weight(x, &p).unwrap()).sum();
        assert_eq!(total, q(1, 1));
    }

    #[test]
    fn norm_values() {
        let p = up(q(0, 1), q(0, 1), 2);
        assert_eq!(hahn_norm(0, &p).unwrap(), q(1, 1));
        assert_eq!(hahn_norm(1, &p).unwrap(), q(8, 3));
        assert_eq!(hahn_norm(2, &p).unwrap(), q(32, 1));
    }

    #[test]
    fn norm_matches_uncancelled_form_away_from_singularity() {
        // N!n!/(N−n)! · (α+β+1)(α+1)_n(β+1)_n(N+α+β+2)_n / ((2n+α+β+1)(α+β+1)_n)
        for (a, b) in [(q(1, 2), q(7, 3)), (q(3, 1), q(0, 1))] {
            let s = &a + &b;
            for level in 0..=6usize {
                for n in 0..=level {
                    let v = factorial(level) * factorial(n) / factorial(level - n)
                        * (&s + 1)
                        * pochhammer(&(&a + 1), n)
                        * pochhammer(&(&b + 1), n)
                        * pochhammer(&(&s + Rational::from(level + 2)), n)
                        / ((&s + Rational::from(2 * n + 1)) * pochhammer(&(&s + 1), n));
                    assert_eq!(lambda(n, &a, &b, level), v);
                }
            }
        }
    }

    #[test]
    fn gram_diagonal_reported() {
        let r = verify_uni(Some("orthogonality"), &up(q(0, 1), q(0, 1), 2)).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks[0].data, vec!["1", "8/3", "32"]);
    }

    #[test]
    fn genfun_level_one() {
        // α=β=0, N=1, x=0: 1 − t on both sides.
        let p = up(q(0, 1), q(0, 1), 1);
        assert_eq!(hahn_eval(1, 0, &p).unwrap(), q(-1, 1));
        assert!(verify_uni(Some("genfun"), &p).unwrap().passed());
        assert!(verify_uni(Some("dual-genfun"), &p).unwrap().passed());
    }

    #[test]
    fn unknown_check_rejected() {
        assert!(verify_uni(Some("recurrence"), &up(q(0, 1), q(0, 1), 1)).is_err());
    }
}
