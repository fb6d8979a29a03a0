//! Parameter sweeps over the default lattice, each folded into one report per
//! family so that a failure names the parameters and the first counterexample.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::classical::{verify_classical, CLASSICAL_RELATIONS};
use crate::hahn_bi::{verify_bi_checks, BiParams, BI_CHECKS};
use crate::hahn_multi::{verify_mv, MultiParams};
use crate::hahn_uni::{verify_uni, UniParams};
use crate::numeric::{q, Rational};
use crate::oracle::{verify_oracle_checks, verify_su11_module};
use crate::parameter_lattice;
use crate::report::{Check, Counterexample, Status, VerificationReport};
use crate::VerifyOptions;

/// Sizes used by the default sweeps.
#[derive(Clone, Debug)]
pub struct SweepSizes {
    pub uni_orthogonality: usize,
    pub uni_genfun: usize,
    pub bi_exact: usize,
    pub bi_genfun: usize,
    pub bi_float: usize,
    pub oracle_exact: usize,
    pub oracle_float: usize,
    pub classical: usize,
    pub su11_nmax: usize,
}

impl Default for SweepSizes {
    fn default() -> Self {
        SweepSizes {
            uni_orthogonality: 12,
            uni_genfun: 10,
            bi_exact: 8,
            bi_genfun: 6,
            bi_float: 10,
            oracle_exact: 6,
            oracle_float: 10,
            classical: 10,
            su11_nmax: 12,
        }
    }
}

/// All ordered pairs from the lattice.
pub fn lattice_pairs() -> Vec<(Rational, Rational)> {
    let l = parameter_lattice();
    l.iter().flat_map(|a| l.iter().map(move |b| (a.clone(), b.clone()))).collect()
}

/// Twelve triples from the lattice, covering `α₁₂ = −1`, the all-zero point,
/// repeated and distinct entries, and both orderings of an asymmetric pair.
pub fn lattice_triples() -> Vec<(Rational, Rational, Rational)> {
    let t = |a: (i64, i64), b: (i64, i64), c: (i64, i64)| (q(a.0, a.1), q(b.0, b.1), q(c.0, c.1));
    vec![
        t((0, 1), (0, 1), (0, 1)),
        t((-1, 2), (-1, 2), (-1, 2)),
        t((-1, 2), (-1, 2), (3, 1)),
        t((1, 2), (7, 3), (3, 1)),
        t((7, 3), (1, 2), (3, 1)),
        t((3, 1), (-1, 2), (1, 2)),
        t((-1, 2), (3, 1), (1, 2)),
        t((7, 3), (0, 1), (-1, 2)),
        t((0, 1), (1, 2), (7, 3)),
        t((1, 2), (1, 2), (1, 2)),
        t((3, 1), (3, 1), (7, 3)),
        t((-1, 2), (0, 1), (0, 1)),
    ]
}

/// `(α, d, N)` for the multivariate Gram checks.
pub fn mv_cases() -> Vec<MultiParams> {
    let l = parameter_lattice();
    let pick = |d: usize, shift: usize| -> Vec<Rational> { (0..=d).map(|k| l[(k + shift) % l.len()].clone()).collect() };
    let mut out = Vec::new();
    for (d, level) in [(3usize, 4usize), (4, 3), (5, 2)] {
        for shift in 0..l.len() {
            out.push(MultiParams::new(pick(d, shift), level).expect("lattice values exceed -1"));
        }
        out.push(MultiParams::new(vec![Rational::zero(); d + 1], level).expect("zero exceeds -1"));
    }
    out
}

/// Weights of the su(1,1) module checks.
pub fn su11_weights() -> Vec<Rational> {
    vec![q(1, 4), q(1, 2), q(3, 4), q(2, 1)]
}

fn residual_value(s: &str) -> f64 {
    s.parse().unwrap_or(f64::INFINITY)
}

/// Folds reports of one suite into a single report with one check per name:
/// the worst residual, and the first counterexample prefixed by its parameters.
pub fn merge(suite: &str, params: String, reports: Vec<VerificationReport>) -> VerificationReport {
    let mut merged: Vec<Check> = Vec::new();
    for r in reports {
        for c in r.checks {
            let slot = match merged.iter_mut().position(|m| m.name == c.name) {
                Some(i) => &mut merged[i],
                None => {
                    merged.push(Check {
                        name: c.name.clone(),
                        status: Status::Pass,
                        max_residual: "0".to_string(),
                        counterexample: None,
                        data: Vec::new(),
                    });
                    merged.last_mut().expect("just pushed")
                }
            };
            if residual_value(&c.max_residual) > residual_value(&slot.max_residual) {
                slot.max_residual = c.max_residual.clone();
            }
            if !c.passed() && slot.passed() {
                slot.status = Status::Fail;
                slot.counterexample = c.counterexample.map(|x| Counterexample { at: format!("{} {}", r.params, x.at), ..x });
            }
        }
    }
    VerificationReport::new(suite, params, merged)
}

fn uni_params(a: &Rational, b: &Rational, n: usize) -> UniParams {
    UniParams::new(a.clone(), b.clone(), n).expect("lattice values exceed -1")
}

fn bi_params(t: &(Rational, Rational, Rational), n: usize) -> BiParams {
    BiParams::new(t.0.clone(), t.1.clone(), t.2.clone(), n).expect("lattice values exceed -1")
}

pub fn sweep_uni(sizes: &SweepSizes) -> VerificationReport {
    let mut jobs = Vec::new();
    for (a, b) in lattice_pairs() {
        for n in 0..=sizes.uni_orthogonality {
            jobs.push((a.clone(), b.clone(), n, "orthogonality"));
        }
        for n in 0..=sizes.uni_genfun {
            jobs.push((a.clone(), b.clone(), n, "genfun"));
            jobs.push((a.clone(), b.clone(), n, "dual-genfun"));
        }
    }
    let reports = jobs
        .par_iter()
        .map(|(a, b, n, c)| verify_uni(Some(c), &uni_params(a, b, *n)).expect("known check"))
        .collect();
    merge(
        "uni",
        format!("lattice pairs, N<={} (generating functions N<={})", sizes.uni_orthogonality, sizes.uni_genfun),
        reports,
    )
}

/// One job per (triple, level); the generating-function check stops at `genfun_max`.
fn bi_jobs(names: &[&'static str], max: usize, genfun_max: usize) -> Vec<(usize, usize, Vec<&'static str>)> {
    let mut jobs = Vec::new();
    for t in 0..lattice_triples().len() {
        for n in 0..=max {
            let names = names.iter().copied().filter(|&c| c != "genfun" || n <= genfun_max).collect();
            jobs.push((t, n, names));
        }
    }
    jobs
}

fn run_bi_jobs(jobs: Vec<(usize, usize, Vec<&'static str>)>, opts: &VerifyOptions) -> Vec<VerificationReport> {
    let triples = lattice_triples();
    // the longest jobs first keeps the pool busy at the tail
    let mut jobs: Vec<_> = jobs.into_iter().enumerate().collect();
    jobs.sort_by_key(|(_, j)| std::cmp::Reverse(j.1));
    let mut out: Vec<(usize, VerificationReport)> = jobs
        .into_par_iter()
        .map(|(idx, (t, n, names))| {
            (idx, verify_bi_checks(&names, &bi_params(&triples[t], n), opts).expect("known checks"))
        })
        .collect();
    out.sort_by_key(|(idx, _)| *idx);
    out.into_iter().map(|(_, r)| r).collect()
}

pub fn sweep_bi_exact(sizes: &SweepSizes, opts: &VerifyOptions) -> VerificationReport {
    let names: Vec<&'static str> = BI_CHECKS.iter().copied().filter(|c| !crate::hahn_bi::is_float_check(c)).collect();
    let reports = run_bi_jobs(bi_jobs(&names, sizes.bi_exact, sizes.bi_genfun), opts);
    merge(
        "bi",
        format!("{} lattice triples, N<={} (generating function N<={})", lattice_triples().len(), sizes.bi_exact, sizes.bi_genfun),
        reports,
    )
}

pub fn sweep_bi_float(sizes: &SweepSizes, opts: &VerifyOptions) -> VerificationReport {
    let names: Vec<&'static str> = BI_CHECKS.iter().copied().filter(|c| crate::hahn_bi::is_float_check(c)).collect();
    let reports = run_bi_jobs(bi_jobs(&names, sizes.bi_float, 0), opts);
    merge("bi-float", format!("{} lattice triples, N<={}", lattice_triples().len(), sizes.bi_float), reports)
}

pub fn sweep_oracle(sizes: &SweepSizes, opts: &VerifyOptions) -> VerificationReport {
    let exact = ["annihilate-constants", "boundary", "commute", "joint-eigenvectors", "su11-spectrum", "tensor-casimir"];
    let float = ["chain-orthogonal", "chain-product", "overlap-unitarity"];
    let triples = lattice_triples();
    let mut jobs = Vec::new();
    for t in 0..triples.len() {
        for n in 0..=sizes.oracle_exact.max(sizes.oracle_float) {
            let mut names = Vec::new();
            if n <= sizes.oracle_exact {
                names.extend(exact);
            }
            if n <= sizes.oracle_float {
                names.extend(float);
            }
            jobs.push((t, n, names));
        }
    }
    let mut reports: Vec<VerificationReport> = jobs
        .par_iter()
        .map(|(t, n, names)| verify_oracle_checks(names, &bi_params(&triples[*t], *n), opts).expect("known checks"))
        .collect();
    reports.extend(
        su11_weights()
            .par_iter()
            .map(|nu| verify_su11_module(nu, sizes.su11_nmax, opts).expect("positive weight"))
            .collect::<Vec<_>>(),
    );
    merge(
        "oracle",
        format!(
            "{} lattice triples, exact N<={}, float N<={}; su(1,1) nu in {{1/4,1/2,3/4,2}}, nmax={}",
            triples.len(),
            sizes.oracle_exact,
            sizes.oracle_float,
            sizes.su11_nmax
        ),
        reports,
    )
}

pub fn sweep_mv() -> VerificationReport {
    let reports = mv_cases().par_iter().map(verify_mv).collect();
    merge("mv", "(d,N) in {(3,4),(4,3),(5,2)}, lattice parameters".to_string(), reports)
}

pub fn sweep_classical(sizes: &SweepSizes) -> VerificationReport {
    let mut jobs = Vec::new();
    for (a, b) in lattice_pairs() {
        for n in 0..=sizes.classical {
            for r in CLASSICAL_RELATIONS {
                jobs.push((a.clone(), b.clone(), n, r));
            }
        }
    }
    let reports = jobs
        .par_iter()
        .map(|(a, b, n, r)| verify_classical(r, *n, a, b).expect("known relation"))
        .collect();
    merge("classical", format!("lattice pairs, n<={}", sizes.classical), reports)
}

/// One suite's merged report and its wall time.
pub struct Timed {
    pub report: VerificationReport,
    pub elapsed: Duration,
}

fn timed(f: impl FnOnce() -> VerificationReport) -> Timed {
    let start = Instant::now();
    let report = f();
    Timed { report, elapsed: start.elapsed() }
}

pub const SUITES: [&str; 5] = ["uni", "bi", "mv", "oracle", "classical"];

/// Runs the lattice sweep of one suite (`bi` yields the exact and float halves).
pub fn sweep_suite(suite: &str, sizes: &SweepSizes, opts: &VerifyOptions) -> Vec<Timed> {
    match suite {
        "uni" => vec![timed(|| sweep_uni(sizes))],
        "bi" => vec![timed(|| sweep_bi_exact(sizes, opts)), timed(|| sweep_bi_float(sizes, opts))],
        "mv" => vec![timed(sweep_mv)],
        "oracle" => vec![timed(|| sweep_oracle(sizes, opts))],
        "classical" => vec![timed(|| sweep_classical(sizes))],
        _ => Vec::new(),
    }
}

pub fn sweep_all(sizes: &SweepSizes, opts: &VerifyOptions) -> Vec<Timed> {
    SUITES.iter().flat_map(|s| sweep_suite(s, sizes, opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_shapes() {
        assert_eq!(lattice_pairs().len(), 25);
        let t = lattice_triples();
        assert!(t.len() >= 10);
        assert!(t.iter().any(|(a, b, _)| a + b == -1));
        assert_eq!(mv_cases().iter().filter(|p| p.dim() == 5).count(), 6);
    }

    #[test]
    fn merge_keeps_worst_and_first_failure() {
        let pass = Check {
            name: "x".to_string(),
            status: Status::Pass,
            max_residual: "1e-12".to_string(),
            counterexample: None,
            data: vec![],
        };
        let fail = Check {
            status: Status::Fail,
            max_residual: "1e-3".to_string(),
            counterexample: Some(Counterexample { at: "here".to_string(), lhs: "1".to_string(), rhs: "2".to_string() }),
            ..pass.clone()
        };
        let r = merge(
            "s",
            String::new(),
            vec![
                VerificationReport::new("s", "a".to_string(), vec![pass.clone()]),
                VerificationReport::new("s", "b".to_string(), vec![fail]),
            ],
        );
        assert!(!r.passed());
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.checks[0].max_residual, "1e-3");
        assert_eq!(r.checks[0].counterexample.as_ref().unwrap().at, "b here");
    }

    #[test]
    fn small_sweeps_pass() {
        let sizes = SweepSizes {
            uni_orthogonality: 3,
            uni_genfun: 3,
            bi_exact: 2,
            bi_genfun: 2,
            bi_float: 2,
            oracle_exact: 2,
            oracle_float: 2,
            classical: 3,
            su11_nmax: 4,
        };
        for t in sweep_all(&sizes, &VerifyOptions::default()) {
            assert!(t.report.passed(), "{:?}", t.report);
        }
    }
}
