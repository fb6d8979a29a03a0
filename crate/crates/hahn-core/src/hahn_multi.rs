//! Hahn polynomials in `d` variables on `{i ∈ ℕ^d : |i| ≤ N}`, built as a chain of
//! univariate factors.
//!
//! With `|i_k| = i₁+…+i_k`, `|n_k| = n₁+…+n_k`, `|α_k| = α₁+…+α_k`, `|i_{d+1}| = N` and
//! `a_k = 2|n_{k−1}| + |α_k| + k − 1`:
//! `P_n(i) = ∏_k h_{n_k}(|i_k| − |n_{k−1}|; a_k, α_{k+1}; |i_{k+1}| − |n_{k−1}|)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::hahn_uni::{check_parameter, hahn_poly};
use crate::numeric::{factorial, pochhammer, Rational};
use crate::report::{Check, ExactTally, VerificationReport};

/// Largest dimension accepted by the exact sweeps.
pub const MAX_DIM: usize = 6;

/// `(α₁, …, α_{d+1}; N)`, every `α_k > −1`, `d ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiParams {
    pub alphas: Vec<Rational>,
    pub n: usize,
}

impl MultiParams {
    pub fn new(alphas: Vec<Rational>, n: usize) -> Result<Self, Error> {
        if alphas.len() < 2 {
            return Err(Error::Invalid(format!("need at least 2 parameters, got {}", alphas.len())));
        }
        for (k, a) in alphas.iter().enumerate() {
            check_parameter(&format!("alpha{}", k + 1), a)?;
        }
        Ok(MultiParams { alphas, n })
    }

    pub fn dim(&self) -> usize {
        self.alphas.len() - 1
    }

    pub fn label(&self) -> String {
        let a: Vec<String> = self.alphas.iter().map(ToString::to_string).collect();
        format!("alpha=({}) N={}", a.join(","), self.n)
    }
}

/// `d` nonnegative entries; the implicit last entry is `N − Σ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// All `d`-tuples with sum `≤ level`, first entry varying fastest.
pub fn simplex_points(d: usize, level: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; d];
    loop {
        out.push(MultiIndex(cur.clone()));
        // colex increment: bump the first entry that still fits, zeroing those before it
        let mut k = 0;
        loop {
            if k == d {
                return out;
            }
            cur[k] += 1;
            if cur.iter().sum::<usize>() <= level {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

fn on_simplex(x: &MultiIndex, p: &MultiParams, what: &str) -> Result<(), Error> {
    if x.0.len() != p.dim() {
        return Err(Error::Invalid(format!("{what} has {} entries, expected {}", x.0.len(), p.dim())));
    }
    if x.total() > p.n {
        return Err(Error::OffSimplex(format!("{what} {:?} with N={}", x.0, p.n)));
    }
    Ok(())
}

fn weight_raw(i: &[usize], p: &MultiParams) -> Rational {
    let rest = p.n - i.iter().sum::<usize>();
    let mut w = factorial(p.n) / pochhammer(&(p.alphas.iter().sum::<Rational>() + Rational::from(p.dim() + 1)), p.n);
    for (x, a) in i.iter().chain(std::iter::once(&rest)).zip(&p.alphas) {
        w *= pochhammer(&(a + 1), *x) / factorial(*x);
    }
    w
}

fn p_raw(n: &[usize], i: &[usize], p: &MultiParams) -> Rational {
    let d = p.dim();
    let partial_i = |k: usize| -> i64 { if k >= d { p.n as i64 } else { i[..k + 1].iter().sum::<usize>() as i64 } };
    let mut result = Rational::one();
    let mut n_prev = 0usize;
    let mut alpha_k = Rational::zero();
    for (k, &nk) in n.iter().enumerate().take(d) {
        alpha_k += &p.alphas[k];
        let a = &alpha_k + Rational::from(2 * n_prev + k);
        let shift = n_prev as i64;
        let x = Rational::integer(partial_i(k) - shift);
        result *= hahn_poly(nk, &x, &a, &p.alphas[k + 1], partial_i(k + 1) - shift);
        if result.is_zero() {
            return result;
        }
        n_prev += nk;
    }
    result
}

/// `∏ C(i_k+α_k, i_k) / C(N+|α|+d, N)` over the `d+1` coordinates.
pub fn mv_weight(i: &MultiIndex, p: &MultiParams) -> Result<Rational, Error> {
    on_simplex(i, p, "point")?;
    Ok(weight_raw(&i.0, p))
}

pub fn mv_p_eval(n: &MultiIndex, i: &MultiIndex, p: &MultiParams) -> Result<Rational, Error> {
    on_simplex(n, p, "degree")?;
    on_simplex(i, p, "point")?;
    Ok(p_raw(&n.0, &i.0, p))
}

/// `Λ_n = Σ_i w_i P_n(i)²`.
pub fn mv_lambda(n: &MultiIndex, p: &MultiParams) -> Result<Rational, Error> {
    on_simplex(n, p, "degree")?;
    Ok(simplex_points(p.dim(), p.n)
        .iter()
        .map(|i| {
            let v = p_raw(&n.0, &i.0, p);
            if v.is_zero() {
                v
            } else {
                weight_raw(&i.0, p) * v.square()
            }
        })
        .sum())
}

/// Gram matrix of the family under the weight: off-diagonal entries must vanish
/// and the diagonal (reported in `data`) must be positive.
pub fn verify_mv(p: &MultiParams) -> VerificationReport {
    let pts = simplex_points(p.dim(), p.n);
    let w: Vec<Rational> = pts.iter().map(|i| weight_raw(&i.0, p)).collect();
    let cols: Vec<Vec<Rational>> = pts.par_iter().map(|n| pts.iter().map(|i| p_raw(&n.0, &i.0, p)).collect()).collect();
    let rows: Vec<(ExactTally, Rational)> = (0..cols.len())
        .into_par_iter()
        .map(|a| {
            let mut tally = ExactTally::new("orthogonality");
            let weighted: Vec<Rational> = w.iter().zip(&cols[a]).map(|(x, y)| x * y).collect();
            let mut diag = Rational::zero();
            for b in a..cols.len() {
                let s: Rational = weighted.iter().zip(&cols[b]).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum();
                if a == b {
                    diag = s;
                } else {
                    tally.record(|| format!("degrees {:?} {:?}", pts[a].0, pts[b].0), &s, &Rational::zero());
                }
            }
            (tally, diag)
        })
        .collect();
    let mut ortho = ExactTally::new("orthogonality");
    let mut positive = ExactTally::new("positive-norms");
    let mut data = Vec::with_capacity(rows.len());
    for (a, (t, diag)) in rows.into_iter().enumerate() {
        ortho.absorb(t);
        let sign = Rational::integer(diag.signum() as i64);
        positive.record(|| format!("degree {:?} norm {diag}", pts[a].0), &sign, &Rational::one());
        data.push(diag.to_string());
    }
    let mut total = ExactTally::new("weight-sum");
    total.record(|| "all points".to_string(), &w.iter().sum::<Rational>(), &Rational::one());
    let checks: Vec<Check> = vec![ortho.finish().with_data(data), positive.finish(), total.finish()];
    VerificationReport::new("mv", p.label(), checks)
}
