//! Bivariate Hahn polynomials on the simplex `{(i, k) : i + k ≤ N}`.
//!
//! Three normalizations of one family:
//! * `P_{m,n}(i,k) = h_m(i; α₁, α₂; i+k) · h_n(i+k−m; 2m+α₁₂+1, α₃; N−m) / (−N)_{m+n}`,
//! * `H_{m,n} = P_{m,n} / (m! n!)`,
//! * `Q_{m,n} = h_m h_n / √Λ_{m,n}`, orthonormal under the weight `w`.
//!
//! Grid points and degree pairs are enumerated k-major: `(0,0), (1,0), …, (N,0), (0,1), …`.

mod exact;
mod normalized;

use std::cell::{OnceCell, RefCell};
use std::rc::Rc;

use serde::Serialize;

pub use normalized::NormalizedCoefficients;

use crate::classical::jacobi_coeffs;
use crate::error::Error;
use crate::hahn_uni::{check_parameter, hahn_poly};
use crate::numeric::{factorial, pochhammer, pochhammer_int, BiPoly, RadicalScalar, Rational};
use crate::report::{Check, VerificationReport};
use crate::VerifyOptions;

/// `(α₁, α₂, α₃; N)` with every `αᵢ > −1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiParams {
    pub alpha1: Rational,
    pub alpha2: Rational,
    pub alpha3: Rational,
    pub n: usize,
}

impl BiParams {
    pub fn new(alpha1: Rational, alpha2: Rational, alpha3: Rational, n: usize) -> Result<Self, Error> {
        check_parameter("alpha1", &alpha1)?;
        check_parameter("alpha2", &alpha2)?;
        check_parameter("alpha3", &alpha3)?;
        Ok(BiParams { alpha1, alpha2, alpha3, n })
    }

    pub fn a12(&self) -> Rational {
        &self.alpha1 + &self.alpha2
    }

    pub fn a123(&self) -> Rational {
        &self.alpha1 + &self.alpha2 + &self.alpha3
    }

    pub fn with_level(&self, n: usize) -> Self {
        BiParams { n, ..self.clone() }
    }

    /// `(α₁+d₁, α₂+d₂, α₃+d₃)` at level `n`.
    pub fn shifted(&self, d1: i64, d2: i64, d3: i64, n: usize) -> Self {
        BiParams { alpha1: &self.alpha1 + d1, alpha2: &self.alpha2 + d2, alpha3: &self.alpha3 + d3, n }
    }

    /// `(α₂, α₁, α₃)`.
    pub fn swapped(&self) -> Self {
        BiParams { alpha1: self.alpha2.clone(), alpha2: self.alpha1.clone(), ..self.clone() }
    }

    pub fn label(&self) -> String {
        format!("alpha=({},{},{}) N={}", self.alpha1, self.alpha2, self.alpha3, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GridPoint {
    pub i: usize,
    pub k: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DegreePair {
    pub m: usize,
    pub n: usize,
}

/// `(a, b)` with `a + b ≤ level`, k-major.
pub fn simplex(level: usize) -> Vec<(usize, usize)> {
    (0..=level).flat_map(|b| (0..=level - b).map(move |a| (a, b))).collect()
}

/// Position of `(a, b)` in [`simplex`].
pub fn simplex_index(level: usize, a: usize, b: usize) -> usize {
    // Σ_{b'<b} (level − b' + 1)
    b * (level + 1) - b * (b.saturating_sub(1)) / 2 + a
}

pub fn grid_points(level: usize) -> Vec<GridPoint> {
    simplex(level).into_iter().map(|(i, k)| GridPoint { i, k }).collect()
}

pub fn degree_pairs(level: usize) -> Vec<DegreePair> {
    simplex(level).into_iter().map(|(m, n)| DegreePair { m, n }).collect()
}

fn on_simplex(a: usize, b: usize, level: usize, what: &str) -> Result<(), Error> {
    if a + b <= level {
        Ok(())
    } else {
        Err(Error::OffSimplex(format!("{what} ({a},{b}) with N={level}")))
    }
}

/// `h_m(i; α₁, α₂; i+k) · h_n(i+k−m; 2m+α₁₂+1, α₃; N−m)` at any integer point.
pub fn hh_raw(m: usize, n: usize, i: i64, k: i64, p: &BiParams) -> Rational {
    let first = hahn_poly(m, &Rational::integer(i), &p.alpha1, &p.alpha2, i + k);
    if first.is_zero() {
        return first;
    }
    let inner = p.a12() + Rational::from(2 * m + 1);
    let second = hahn_poly(n, &Rational::integer(i + k - m as i64), &inner, &p.alpha3, p.n as i64 - m as i64);
    first * second
}

/// `P_{m,n}(i,k)`; zero when `m + n > N`.
pub fn p2_raw(m: usize, n: usize, i: i64, k: i64, p: &BiParams) -> Rational {
    if m + n > p.n {
        return Rational::zero();
    }
    hh_raw(m, n, i, k, p) / pochhammer_int(-(p.n as i64), m + n)
}

/// `w_{i,k;N} = N!/(i! k! (N−i−k)!) · (α₁+1)_i (α₂+1)_k (α₃+1)_{N−i−k} / (α₁₂₃+3)_N`.
pub fn weight2_raw(i: usize, k: usize, p: &BiParams) -> Rational {
    let rest = p.n - i - k;
    factorial(p.n) / (factorial(i) * factorial(k) * factorial(rest))
        * pochhammer(&(&p.alpha1 + 1), i)
        * pochhammer(&(&p.alpha2 + 1), k)
        * pochhammer(&(&p.alpha3 + 1), rest)
        / pochhammer(&(p.a123() + 3), p.n)
}

/// `λ_{m,n;N} = Σ w P²`, in a form free of `0/0` at `α₁₂ = −1`:
/// `m! n! (N−m−n)!/N! · (α₁+1)_m (α₂+1)_m (α₃+1)_n (α₁₂+1+m)_m / (α₁₂₃+3)_N
///  · (2m+α₁₂+2)_n (2m+α₁₂₃+2+n)_n (2m+2n+α₁₂₃+3)_{N−m−n}`.
pub fn lambda2_raw(m: usize, n: usize, p: &BiParams) -> Rational {
    let (a12, a123) = (p.a12(), p.a123());
    let r = |x: usize| Rational::from(x);
    factorial(m) * factorial(n) * factorial(p.n - m - n) / factorial(p.n)
        * pochhammer(&(&p.alpha1 + 1), m)
        * pochhammer(&(&p.alpha2 + 1), m)
        * pochhammer(&(&p.alpha3 + 1), n)
        * pochhammer(&(&a12 + r(m + 1)), m)
        / pochhammer(&(&a123 + 3), p.n)
        * pochhammer(&(&a12 + r(2 * m + 2)), n)
        * pochhammer(&(&a123 + r(2 * m + n + 2)), n)
        * pochhammer(&(&a123 + r(2 * m + 2 * n + 3)), p.n - m - n)
}

pub fn weight2(g: GridPoint, p: &BiParams) -> Result<Rational, Error> {
    on_simplex(g.i, g.k, p.n, "grid point")?;
    Ok(weight2_raw(g.i, g.k, p))
}

/// `W = √w`.
pub fn amplitude(g: GridPoint, p: &BiParams) -> Result<RadicalScalar, Error> {
    RadicalScalar::sqrt(weight2(g, p)?)
}

pub fn p2_eval(d: DegreePair, g: GridPoint, p: &BiParams) -> Result<Rational, Error> {
    on_simplex(d.m, d.n, p.n, "degree")?;
    on_simplex(g.i, g.k, p.n, "grid point")?;
    Ok(p2_raw(d.m, d.n, g.i as i64, g.k as i64, p))
}

/// `H_{m,n} = P_{m,n}/(m! n!)`.
pub fn h2_eval(d: DegreePair, g: GridPoint, p: &BiParams) -> Result<Rational, Error> {
    Ok(p2_eval(d, g, p)? / (factorial(d.m) * factorial(d.n)))
}

pub fn lambda2(d: DegreePair, p: &BiParams) -> Result<Rational, Error> {
    on_simplex(d.m, d.n, p.n, "degree")?;
    Ok(lambda2_raw(d.m, d.n, p))
}

/// `Λ_{m,n;N} = λ_{m,n;N} · ((−N)_{m+n})²`, the norm of `h_m h_n`.
pub fn big_lambda(d: DegreePair, p: &BiParams) -> Result<Rational, Error> {
    let l = lambda2(d, p)?;
    Ok(l * pochhammer_int(-(p.n as i64), d.m + d.n).square())
}

/// `Q_{m,n}(i,k) = h_m h_n · √(1/Λ)`.
pub fn q2_eval(d: DegreePair, g: GridPoint, p: &BiParams) -> Result<RadicalScalar, Error> {
    on_simplex(g.i, g.k, p.n, "grid point")?;
    let lam = big_lambda(d, p)?;
    RadicalScalar::new(hh_raw(d.m, d.n, g.i as i64, g.k as i64, p), lam.recip())
}

/// `(1+z₁+z₂)^{N−m−n} · (z₁+z₂)^m P_m^{(α₁,α₂)}((z₂−z₁)/(z₁+z₂))
///  · (1+z₁+z₂)^n P_n^{(2m+α₁₂+1,α₃)}((1−z₁−z₂)/(1+z₁+z₂))`, whose coefficient of
/// `z₁^{x₁} z₂^{x₂}` is `N!/(x₁! x₂! x₃!) H_{m,n}(x₁,x₂)`.
pub fn genfun_polynomial(m: usize, n: usize, p: &BiParams) -> BiPoly {
    let (z1, z2, one) = (BiPoly::z1(), BiPoly::z2(), BiPoly::one());
    let sum = &z1 + &z2;
    let one_plus = &one + &sum;
    let one_minus = &one - &sum;
    let diff = &z2 - &z1;
    let first = jacobi_coeffs(m, &p.alpha1, &p.alpha2).homogenize(&diff, &sum, m);
    let inner = p.a12() + Rational::from(2 * m + 1);
    let second = jacobi_coeffs(n, &inner, &p.alpha3).homogenize(&one_minus, &one_plus, n);
    &(&one_plus.pow(p.n - m - n) * &first) * &second
}

/// Lazily filled `P` values over all degrees of one level and points in `[−2, N+2]²`.
/// Degrees outside the simplex read as zero.
///
/// `P = first(m; i, s) · second(m, n; s) / (−N)_{m+n}` with `s = i + k`, so the two
/// factors are cached on their own three-index grids.
pub struct PTable {
    params: BiParams,
    span: usize,
    cells: Vec<OnceCell<Rational>>,
    first: Vec<OnceCell<Rational>>,
    second: Vec<OnceCell<Rational>>,
    scale: Vec<Rational>,
    zero: Rational,
}

const PAD: i64 = 2;

impl PTable {
    pub fn new(params: &BiParams) -> Self {
        let level = params.n;
        let span = level + 1 + 2 * PAD as usize;
        let sums = 2 * span - 1;
        let fresh = |len: usize| (0..len).map(|_| OnceCell::new()).collect::<Vec<_>>();
        let scale = (0..=level).map(|d| pochhammer_int(-(level as i64), d).recip()).collect();
        PTable {
            params: params.clone(),
            span,
            cells: fresh((level + 1) * (level + 1) * span * span),
            first: fresh((level + 1) * span * sums),
            second: fresh((level + 1) * (level + 1) * sums),
            scale,
            zero: Rational::zero(),
        }
    }

    pub fn params(&self) -> &BiParams {
        &self.params
    }

    pub fn level(&self) -> usize {
        self.params.n
    }

    /// `h_m(i; α₁, α₂; s)`.
    fn first(&self, m: usize, i: i64, s: i64) -> &Rational {
        let sums = 2 * self.span - 1;
        let idx = (m * self.span + (i + PAD) as usize) * sums + (s + 2 * PAD) as usize;
        self.first[idx].get_or_init(|| {
            hahn_poly(m, &Rational::integer(i), &self.params.alpha1, &self.params.alpha2, s)
        })
    }

    /// `h_n(s−m; 2m+α₁₂+1, α₃; N−m)`.
    fn second(&self, m: usize, n: usize, s: i64) -> &Rational {
        let sums = 2 * self.span - 1;
        let idx = (m * (self.params.n + 1) + n) * sums + (s + 2 * PAD) as usize;
        self.second[idx].get_or_init(|| {
            let inner = self.params.a12() + Rational::from(2 * m + 1);
            let x = Rational::integer(s - m as i64);
            hahn_poly(n, &x, &inner, &self.params.alpha3, self.params.n as i64 - m as i64)
        })
    }

    fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// # Panics
    /// Panics when the point lies outside `[−2, N+2]²`.
    fn cell_index(&self, m: usize, n: usize, i: i64, k: i64) -> usize {
        let (pi, pk) = (i + PAD, k + PAD);
        assert!(
            pi >= 0 && pk >= 0 && (pi as usize) < self.span && (pk as usize) < self.span,
            "point ({i},{k}) outside table"
        );
        ((m * (self.params.n + 1) + n) * self.span + pi as usize) * self.span + pk as usize
    }

    /// # Panics
    /// Panics when the point lies outside `[−2, N+2]²`.
    pub fn get(&self, m: i64, n: i64, i: i64, k: i64) -> &Rational {
        let level = self.params.n as i64;
        if m < 0 || n < 0 || m + n > level {
            return &self.zero;
        }
        let (mu, nu) = (m as usize, n as usize);
        self.cells[self.cell_index(mu, nu, i, k)].get_or_init(|| {
            let first = self.first(mu, i, i + k);
            if first.is_zero() {
                return Rational::zero();
            }
            first * self.second(mu, nu, i + k) * &self.scale[mu + nu]
        })
    }
}

/// `Q` in `f64`, derived from a [`PTable`] through `Q = (−1)^{m+n} P / √λ`.
pub struct QTable {
    p: Rc<PTable>,
    scale: Vec<f64>,
    cells: Vec<OnceCell<f64>>,
}

impl QTable {
    pub fn new(params: &BiParams) -> Self {
        Self::over(Rc::new(PTable::new(params)))
    }

    /// Shares an existing exact table.
    pub fn over(p: Rc<PTable>) -> Self {
        let params = p.params();
        let level = params.n;
        let mut scale = vec![0.0; (level + 1) * (level + 1)];
        for (m, n) in simplex(level) {
            let sign = if (m + n) % 2 == 0 { 1.0 } else { -1.0 };
            scale[m * (level + 1) + n] = sign / lambda2_raw(m, n, params).to_f64().sqrt();
        }
        let cells = (0..p.cell_count()).map(|_| OnceCell::new()).collect();
        QTable { p, scale, cells }
    }

    pub fn params(&self) -> &BiParams {
        self.p.params()
    }

    pub fn get(&self, m: i64, n: i64, i: i64, k: i64) -> f64 {
        let level = self.p.level() as i64;
        if m < 0 || n < 0 || m + n > level {
            return 0.0;
        }
        let (mu, nu) = (m as usize, n as usize);
        *self.cells[self.p.cell_index(mu, nu, i, k)]
            .get_or_init(|| self.p.get(m, n, i, k).to_f64() * self.scale[mu * (self.p.level() + 1) + nu])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OverlapMode {
    Float,
    Radical,
    Squared,
}

#[derive(Clone, Debug, PartialEq)]
pub enum OverlapEntries {
    Float(Vec<f64>),
    Radical(Vec<RadicalScalar>),
    /// `(W Q)²` with the sign of `W Q` (−1, 0 or 1).
    Squared(Vec<(Rational, i32)>),
}

/// Row-major matrix of `W_{i,k} Q_{m,n}(i,k)`, rows = grid points, columns = degrees.
#[derive(Clone, Debug, PartialEq)]
pub struct OverlapMatrix {
    pub params: BiParams,
    pub rows: Vec<GridPoint>,
    pub cols: Vec<DegreePair>,
    pub entries: OverlapEntries,
}

impl OverlapMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Float view of the entries.
    pub fn to_f64(&self) -> Vec<f64> {
        match &self.entries {
            OverlapEntries::Float(v) => v.clone(),
            OverlapEntries::Radical(v) => v.iter().map(RadicalScalar::to_f64).collect(),
            OverlapEntries::Squared(v) => v.iter().map(|(s, sg)| *sg as f64 * s.to_f64().sqrt()).collect(),
        }
    }

    /// Entries as text: `f64` at 17 significant digits, radicals as `c*sqrt(s)`,
    /// squared entries as `±s`.
    pub fn entry_strings(&self) -> Vec<String> {
        match &self.entries {
            OverlapEntries::Float(v) => v.iter().map(|x| crate::numeric::format_f64(*x)).collect(),
            OverlapEntries::Radical(v) => v.iter().map(ToString::to_string).collect(),
            OverlapEntries::Squared(v) => {
                v.iter().map(|(s, sg)| if *sg < 0 { format!("-{s}") } else { s.to_string() }).collect()
            }
        }
    }
}

/// Interbasis coefficients `W_{i,k} Q_{m,n}(i,k) = h_m h_n · √(w/Λ)`.
pub fn overlap2(p: &BiParams, mode: OverlapMode) -> OverlapMatrix {
    let rows = grid_points(p.n);
    let cols = degree_pairs(p.n);
    let lams: Vec<Rational> = cols.iter().map(|d| big_lambda(*d, p).expect("degree on simplex")).collect();
    let scale: Vec<Rational> = (0..=p.n).map(|d| pochhammer_int(-(p.n as i64), d)).collect();
    let table = PTable::new(p);
    let mut radicals = Vec::with_capacity(rows.len() * cols.len());
    for g in &rows {
        let w = weight2_raw(g.i, g.k, p);
        for (d, lam) in cols.iter().zip(&lams) {
            // h_m h_n = P · (−N)_{m+n}
            let hh = table.get(d.m as i64, d.n as i64, g.i as i64, g.k as i64) * &scale[d.m + d.n];
            radicals.push(RadicalScalar::new(hh, &w / lam).expect("positive weight"));
        }
    }
    let entries = match mode {
        OverlapMode::Radical => OverlapEntries::Radical(radicals),
        OverlapMode::Float => OverlapEntries::Float(radicals.iter().map(RadicalScalar::to_f64).collect()),
        OverlapMode::Squared => OverlapEntries::Squared(radicals.iter().map(|r| (r.squared(), r.signum())).collect()),
    };
    OverlapMatrix { params: p.clone(), rows, cols, entries }
}

/// Exact identities first, then the floating checks of the square-root normalized family.
pub const BI_CHECKS: [&str; 16] = [
    "orthogonality",
    "symmetry",
    "recurrence-x1",
    "recurrence-x2",
    "diff-L1",
    "diff-L2",
    "forward-shift-m",
    "forward-shift-n",
    "backward-shift-m",
    "backward-shift-n",
    "structure",
    "genfun",
    "normalized-structure-float",
    "normalized-recurrence-float",
    "normalized-difference-float",
    "normalized-lowering-float",
];

pub fn is_float_check(name: &str) -> bool {
    name.ends_with("-float")
}

/// Shared tables for one parameter set.
/// Tables shared by the checks of one configuration, built on first use.
pub(crate) struct Tables {
    pub p: BiParams,
    pub main: Rc<PTable>,
    exact: RefCell<Vec<Rc<PTable>>>,
    float: RefCell<Vec<Rc<QTable>>>,
}

impl Tables {
    pub(crate) fn new(p: &BiParams) -> Self {
        let main = Rc::new(PTable::new(p));
        Tables { p: p.clone(), main: main.clone(), exact: RefCell::new(vec![main]), float: RefCell::new(Vec::new()) }
    }

    pub(crate) fn ptable(&self, p: &BiParams) -> Rc<PTable> {
        if let Some(t) = self.exact.borrow().iter().find(|t| t.params() == p) {
            return t.clone();
        }
        let t = Rc::new(PTable::new(p));
        self.exact.borrow_mut().push(t.clone());
        t
    }

    pub(crate) fn qtable(&self, p: &BiParams) -> Rc<QTable> {
        if let Some(t) = self.float.borrow().iter().find(|t| t.params() == p) {
            return t.clone();
        }
        let t = Rc::new(QTable::over(self.ptable(p)));
        self.float.borrow_mut().push(t.clone());
        t
    }
}

fn run_check(name: &str, t: &Tables, opts: &VerifyOptions) -> Check {
    match name {
        "orthogonality" => exact::orthogonality(t, opts),
        "symmetry" => exact::symmetry(t, opts),
        "recurrence-x1" => exact::recurrence(t, opts, false),
        "recurrence-x2" => exact::recurrence(t, opts, true),
        "diff-L1" => exact::diff_l1(t, opts),
        "diff-L2" => exact::diff_l2(t, opts),
        "forward-shift-m" => exact::forward_shift_m(t, opts),
        "forward-shift-n" => exact::forward_shift_n(t, opts),
        "backward-shift-m" => exact::backward_shift_m(t, opts),
        "backward-shift-n" => exact::backward_shift_n(t, opts),
        "structure" => exact::structure(t, opts),
        "genfun" => exact::genfun(t, opts),
        "normalized-structure-float" => normalized::structure(t, opts),
        "normalized-recurrence-float" => normalized::recurrence(t, opts),
        "normalized-difference-float" => normalized::difference(t, opts),
        "normalized-lowering-float" => normalized::contiguity(t, opts),
        _ => unreachable!("validated check name"),
    }
}

/// Runs one named check, or all of them when `check` is `None`.
pub fn verify_bi(check: Option<&str>, p: &BiParams, opts: &VerifyOptions) -> Result<VerificationReport, Error> {
    let names: Vec<&str> = match check {
        Some(c) if BI_CHECKS.contains(&c) => vec![c],
        Some(c) => return Err(Error::UnknownCheck(c.to_string())),
        None => BI_CHECKS.to_vec(),
    };
    verify_bi_checks(&names, p, opts)
}

/// Runs several named checks against one shared table.
pub fn verify_bi_checks(names: &[&str], p: &BiParams, opts: &VerifyOptions) -> Result<VerificationReport, Error> {
    if let Some(c) = names.iter().find(|c| !BI_CHECKS.contains(c)) {
        return Err(Error::UnknownCheck(c.to_string()));
    }
    let tables = Tables::new(p);
    let checks = names.iter().map(|c| run_check(c, &tables, opts)).collect();
    Ok(VerificationReport::new("bi", p.label(), checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q;

    fn zero3(n: usize) -> BiParams {
        BiParams::new(q(0, 1), q(0, 1), q(0, 1), n).unwrap()
    }

    fn col(p: &BiParams, m: usize, n: usize) -> Vec<Rational> {
        grid_points(p.n).into_iter().map(|g| p2_eval(DegreePair { m, n }, g, p).unwrap()).collect()
    }

    #[test]
    fn simplex_order_and_index() {
        assert_eq!(simplex(1), vec![(0, 0), (1, 0), (0, 1)]);
        for level in 0..8 {
            for (idx, (a, b)) in simplex(level).into_iter().enumerate() {
                assert_eq!(simplex_index(level, a, b), idx);
            }
            assert_eq!(simplex(level).len(), (level + 1) * (level + 2) / 2);
        }
    }

    #[test]
    fn weight_level_one() {
        let p = zero3(1);
        for g in grid_points(1) {
            assert_eq!(weight2(g, &p).unwrap(), q(1, 3));
            assert_eq!(amplitude(g, &p).unwrap(), RadicalScalar::sqrt(q(1, 3)).unwrap());
        }
        assert_eq!(weight2(GridPoint { i: 0, k: 0 }, &zero3(0)).unwrap(), q(1, 1));
        assert!(weight2(GridPoint { i: 1, k: 1 }, &p).is_err());
    }

    #[test]
    fn weight_sums_to_one() {
        let p = BiParams::new(q(1, 2), q(7, 3), q(-1, 2), 6).unwrap();
        let s: Rational = grid_points(6).into_iter().map(|g| weight2(g, &p).unwrap()).sum();
        assert_eq!(s, q(1, 1));
    }

    #[test]
    fn polynomial_values_level_one() {
        let p = zero3(1);
        let v = |xs: &[i64]| xs.iter().map(|&x| Rational::integer(x)).collect::<Vec<_>>();
        assert_eq!(col(&p, 0, 0), v(&[1, 1, 1]));
        assert_eq!(col(&p, 1, 0), v(&[0, -1, 1]));
        assert_eq!(col(&p, 0, 1), v(&[2, -1, -1]));
    }

    #[test]
    fn norms_level_one() {
        let p = zero3(1);
        let d = |m, n| DegreePair { m, n };
        assert_eq!(lambda2(d(0, 0), &p).unwrap(), q(1, 1));
        assert_eq!(lambda2(d(1, 0), &p).unwrap(), q(2, 3));
        assert_eq!(lambda2(d(0, 1), &p).unwrap(), q(2, 1));
        assert_eq!(big_lambda(d(0, 0), &p).unwrap(), q(1, 1));
        assert_eq!(big_lambda(d(1, 0), &p).unwrap(), q(2, 3));
        assert_eq!(big_lambda(d(0, 1), &p).unwrap(), q(2, 1));
        assert!(lambda2(d(1, 1), &p).is_err());
    }

    #[test]
    fn normalized_value_level_one() {
        let p = zero3(1);
        let v = q2_eval(DegreePair { m: 1, n: 0 }, GridPoint { i: 0, k: 1 }, &p).unwrap();
        assert_eq!(v, RadicalScalar::new(q(-1, 1), q(3, 2)).unwrap());
        let one = q2_eval(DegreePair { m: 0, n: 0 }, GridPoint { i: 0, k: 1 }, &p).unwrap();
        assert_eq!(one, RadicalScalar::one());
    }

    #[test]
    fn overlap_level_zero_and_one() {
        let m0 = overlap2(&zero3(0), OverlapMode::Radical);
        assert_eq!(m0.entry_strings(), vec!["1"]);
        let m1 = overlap2(&zero3(1), OverlapMode::Float).to_f64();
        let (s3, s2, s6) = (3f64.sqrt(), 2f64.sqrt(), 6f64.sqrt());
        // columns (0,0), (1,0), (0,1); rows (0,0), (1,0), (0,1)
        let expect = [
            1.0 / s3, 0.0, -2.0 / s6,
            1.0 / s3, 1.0 / s2, 1.0 / s6,
            1.0 / s3, -1.0 / s2, 1.0 / s6,
        ];
        for (a, b) in m1.iter().zip(expect) {
            assert!((a - b).abs() < 1e-15, "{a} vs {b}");
        }
    }

    #[test]
    fn h_is_p_over_factorials() {
        let p = BiParams::new(q(1, 2), q(0, 1), q(3, 1), 4).unwrap();
        for d in degree_pairs(4) {
            for g in grid_points(4) {
                let h = h2_eval(d, g, &p).unwrap();
                assert_eq!(h * factorial(d.m) * factorial(d.n), p2_eval(d, g, &p).unwrap());
            }
        }
    }

    #[test]
    fn unknown_check_rejected() {
        assert!(verify_bi(Some("parity"), &zero3(1), &VerifyOptions::default()).is_err());
    }
}
