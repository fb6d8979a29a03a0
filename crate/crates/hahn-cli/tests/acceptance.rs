//! One PASS/FAIL line per acceptance criterion, with its runtime against its budget.
//! Runs without the libtest harness so the lines always reach the terminal.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hahn_core::hahn_bi::{self, BI_CHECKS};
use hahn_core::hahn_multi::{mv_lambda, mv_p_eval, mv_weight};
use hahn_core::hahn_uni::{self, verify_uni};
use hahn_core::numeric::pochhammer_int;
use hahn_core::oracle::{verify_oracle_checks, verify_su11_module};
use hahn_core::sweeps::{self, lattice_pairs, lattice_triples, su11_weights, SweepSizes};
use hahn_core::{BiParams, MultiIndex, MultiParams, UniParams, VerificationReport, VerifyOptions};

/// `Ok(summary)` or `Err(first failure)`.
type Outcome = Result<String, String>;

/// Number, title, optional budget in seconds, and the run itself.
type Criterion = (u32, &'static str, Option<u64>, Box<dyn Fn() -> Outcome>);

fn expect(report: &VerificationReport) -> Result<(), String> {
    match report.checks.iter().find(|c| !c.passed()) {
        None => Ok(()),
        Some(c) => Err(format!(
            "{} {}: {} residual {} at {}",
            report.suite,
            report.params,
            c.name,
            c.max_residual,
            c.counterexample.as_ref().map_or("-", |x| x.at.as_str())
        )),
    }
}

fn triple(t: &(hahn_core::Rational, hahn_core::Rational, hahn_core::Rational), n: usize) -> BiParams {
    BiParams::new(t.0.clone(), t.1.clone(), t.2.clone(), n).expect("lattice triple")
}

fn uni_checks(names: &[&str], max: usize) -> Outcome {
    let mut runs = 0;
    for (a, b) in lattice_pairs() {
        for n in 0..=max {
            let p = UniParams::new(a.clone(), b.clone(), n).expect("lattice pair");
            for c in names {
                expect(&verify_uni(Some(c), &p).map_err(|e| e.to_string())?)?;
                runs += 1;
            }
        }
    }
    let singular = lattice_pairs().iter().any(|(a, b)| a.to_string() == "-1/2" && b.to_string() == "-1/2");
    if !singular {
        return Err("lattice lacks alpha = beta = -1/2".into());
    }
    Ok(format!("{} on 25 pairs, N<={max}: {runs} exact runs", names.join(", ")))
}

fn oracle_checks(names: &[&str], max: usize) -> Outcome {
    let opts = VerifyOptions::default();
    for t in lattice_triples() {
        for n in 0..=max {
            expect(&verify_oracle_checks(names, &triple(&t, n), &opts).map_err(|e| e.to_string())?)?;
        }
    }
    Ok(format!("{} on {} triples, N<={max}", names.join(", "), lattice_triples().len()))
}

fn criterion_3() -> Outcome {
    let sizes = SweepSizes::default();
    let r = sweeps::sweep_bi_exact(&sizes, &VerifyOptions::default());
    expect(&r)?;
    let exact: Vec<&str> = BI_CHECKS.iter().copied().filter(|c| !hahn_bi::is_float_check(c)).collect();
    let ran: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
    if ran != exact || lattice_triples().len() < 10 || sizes.bi_exact < 8 || sizes.bi_genfun < 6 {
        return Err(format!("coverage: ran {ran:?}"));
    }
    if let Some(c) = r.checks.iter().find(|c| c.max_residual != "0") {
        return Err(format!("{} residual {}", c.name, c.max_residual));
    }
    Ok(format!("{} checks, {}", ran.len(), r.params))
}

fn criterion_4() -> Outcome {
    let r = sweeps::sweep_bi_float(&SweepSizes::default(), &VerifyOptions::default());
    expect(&r)?;
    let worst = r.checks.iter().map(|c| c.max_residual.parse::<f64>().unwrap_or(f64::INFINITY)).fold(0.0, f64::max);
    if r.checks.len() != 4 || worst > 1e-10 {
        return Err(format!("worst residual {worst:e}"));
    }
    Ok(format!("4 relation families, {}, worst {worst:.1e}", r.params))
}

/// The `d = 1` and `d = 2` multivariate families against the dedicated modules.
fn specializations() -> Result<usize, String> {
    let mut compared = 0;
    for (a, b) in lattice_pairs() {
        for level in 0..=6 {
            let p = MultiParams::new(vec![a.clone(), b.clone()], level).map_err(|e| e.to_string())?;
            let up = UniParams::new(a.clone(), b.clone(), level).map_err(|e| e.to_string())?;
            for x in 0..=level {
                let i = MultiIndex(vec![x]);
                if mv_weight(&i, &p).unwrap() != hahn_uni::hahn_weight(x, &up).unwrap() {
                    return Err(format!("d=1 weight at x={x}, {}", p.label()));
                }
                for n in 0..=level {
                    let v = mv_p_eval(&MultiIndex(vec![n]), &i, &p).unwrap();
                    if v != hahn_uni::hahn_eval(n, x as i64, &up).unwrap() {
                        return Err(format!("d=1 value n={n} x={x}, {}", p.label()));
                    }
                    compared += 1;
                }
            }
        }
    }
    for t in lattice_triples() {
        for level in 0..=5 {
            let bp = triple(&t, level);
            let p = MultiParams::new(vec![t.0.clone(), t.1.clone(), t.2.clone()], level).map_err(|e| e.to_string())?;
            for d in hahn_bi::degree_pairs(level) {
                let n = MultiIndex(vec![d.m, d.n]);
                let scale = pochhammer_int(-(level as i64), d.m + d.n);
                if mv_lambda(&n, &p).unwrap() != hahn_bi::big_lambda(d, &bp).unwrap() {
                    return Err(format!("d=2 norm ({},{}), {}", d.m, d.n, p.label()));
                }
                for g in hahn_bi::grid_points(level) {
                    let i = MultiIndex(vec![g.i, g.k]);
                    if mv_p_eval(&n, &i, &p).unwrap() != hahn_bi::p2_eval(d, g, &bp).unwrap() * &scale {
                        return Err(format!("d=2 value ({},{}) at ({},{}), {}", d.m, d.n, g.i, g.k, p.label()));
                    }
                    compared += 1;
                }
            }
        }
    }
    Ok(compared)
}

fn criterion_8() -> Outcome {
    let r = sweeps::sweep_mv();
    expect(&r)?;
    let compared = specializations()?;
    Ok(format!("{}; {compared} specialization values equal", r.params))
}

fn criterion_9() -> Outcome {
    let r = sweeps::sweep_classical(&SweepSizes::default());
    expect(&r)?;
    if !r.checks.iter().any(|c| c.name == "laguerre-addition") {
        return Err("laguerre-addition missing".into());
    }
    Ok(format!("{} relations, {}", r.checks.len(), r.params))
}

fn criterion_10() -> Outcome {
    let opts = VerifyOptions::default();
    for nu in su11_weights() {
        expect(&verify_su11_module(&nu, 12, &opts).map_err(|e| e.to_string())?)?;
    }
    oracle_checks(&["su11-spectrum", "tensor-casimir"], 6)?;
    Ok("casimir, commutators, truncation for 4 weights at nmax=12; spectrum on triples N<=6".into())
}

fn criterion_11() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_hahn"))
        .args(["verify", "--suite", "all", "--format", "csv"])
        .output()
        .map_err(|e| e.to_string())?;
    match out.status.code() {
        Some(0) => Ok(format!("{} check lines", String::from_utf8_lossy(&out.stdout).lines().count() - 1)),
        code => Err(format!("exit {code:?}: {}", String::from_utf8_lossy(&out.stderr).trim())),
    }
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (1, "univariate orthogonality", Some(5), Box::new(|| uni_checks(&["orthogonality"], 12))),
        (2, "univariate generating functions", Some(10), Box::new(|| uni_checks(&["genfun", "dual-genfun"], 10))),
        (3, "bivariate exact suite", Some(60), Box::new(criterion_3)),
        (4, "normalized float suite", Some(30), Box::new(criterion_4)),
        (5, "overlap unitarity", None, Box::new(|| oracle_checks(&["overlap-unitarity"], 10))),
        (6, "chain factorization", None, Box::new(|| oracle_checks(&["chain-product", "chain-orthogonal"], 10))),
        (
            7,
            "difference-operator oracle",
            None,
            Box::new(|| oracle_checks(&["annihilate-constants", "boundary", "commute", "joint-eigenvectors"], 6)),
        ),
        (8, "multivariate family", None, Box::new(criterion_8)),
        (9, "classical identities", None, Box::new(criterion_9)),
        (10, "su(1,1) module", None, Box::new(criterion_10)),
        (11, "verify --suite all", Some(120), Box::new(criterion_11)),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match (outcome, budget) {
            (Ok(_), Some(s)) if elapsed > Duration::from_secs(s) => Err(format!("over budget of {s} s")),
            (o, _) => o,
        };
        let limit = budget.map_or(String::new(), |s| format!(" (limit {s} s)"));
        let secs = elapsed.as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS {secs:7.2}s{limit} {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL {secs:7.2}s{limit} {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
