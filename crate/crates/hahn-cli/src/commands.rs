//! Command dispatch. Every function returns the rendered output or a one-line
//! usage diagnostic.

use serde::Serialize;

use hahn_core::hahn_bi::{self, genfun_polynomial, grid_points, overlap2, BiParams, OverlapMode};
use hahn_core::hahn_multi::{self, MultiIndex, MultiParams};
use hahn_core::hahn_uni::{self, genfun_series, UniParams};
use hahn_core::numeric::{format_f64, RadicalScalar, Rational};
use hahn_core::oracle::{chain_matrices, cylindrical_labels, verify_oracle, FloatMatrix};
use hahn_core::sweeps::{self, SweepSizes};
use hahn_core::{classical, DegreePair, GridPoint, VerificationReport, VerifyOptions};

use crate::args::{EvalArgs, Family, Format, Mode, Shared, Suite, VerifyArgs};
use crate::render::{self, label2, label_list, Table};

pub type Usage = String;

/// Rendered text and, after a failed verification, a one-line summary of the first failure.
pub struct Output {
    pub text: String,
    pub failure: Option<String>,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failure: None }
    }
}

fn first_failure(reports: &[VerificationReport]) -> Option<String> {
    reports.iter().flat_map(|r| r.checks.iter().map(move |c| (r, c))).find(|(_, c)| !c.passed()).map(|(r, c)| {
        match &c.counterexample {
            Some(x) => format!("{} {} {}: at {}: lhs {} rhs {}", r.suite, r.params, c.name, x.at, x.lhs, x.rhs),
            None => format!("{} {} {}: residual {}", r.suite, r.params, c.name, c.max_residual),
        }
    })
}

fn usage(e: impl std::fmt::Display) -> Usage {
    e.to_string()
}

fn parse_alpha(shared: &Shared) -> Result<Vec<Rational>, Usage> {
    let raw = shared.alpha.as_deref().ok_or("missing --alpha")?;
    raw.split(',')
        .map(|s| s.trim().parse::<Rational>().map_err(|e| format!("--alpha: {e}")))
        .collect()
}

fn parse_level(shared: &Shared) -> Result<usize, Usage> {
    shared.n.ok_or_else(|| "missing --N".to_string())
}

fn parse_list(raw: &str, flag: &str) -> Result<Vec<usize>, Usage> {
    raw.split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| format!("{flag}: '{s}' is not a nonnegative integer")))
        .collect()
}

fn parse_tol(shared: &Shared) -> Result<f64, Usage> {
    match shared.tol.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("--tol: '{}' is not a positive number", shared.tol)),
    }
}

fn expect_len<T>(v: &[T], n: usize, what: &str) -> Result<(), Usage> {
    if v.len() == n {
        Ok(())
    } else {
        Err(format!("{what} needs {n} comma-separated values, got {}", v.len()))
    }
}

fn uni_params(shared: &Shared) -> Result<UniParams, Usage> {
    let a = parse_alpha(shared)?;
    expect_len(&a, 2, "--alpha")?;
    UniParams::new(a[0].clone(), a[1].clone(), parse_level(shared)?).map_err(usage)
}

fn bi_params(shared: &Shared) -> Result<BiParams, Usage> {
    let a = parse_alpha(shared)?;
    expect_len(&a, 3, "--alpha")?;
    BiParams::new(a[0].clone(), a[1].clone(), a[2].clone(), parse_level(shared)?).map_err(usage)
}

fn multi_params(shared: &Shared) -> Result<MultiParams, Usage> {
    let a = parse_alpha(shared)?;
    if a.len() > hahn_multi::MAX_DIM + 1 {
        return Err(format!("--alpha: at most {} values", hahn_multi::MAX_DIM + 1));
    }
    MultiParams::new(a, parse_level(shared)?).map_err(usage)
}

fn radical_text(r: &RadicalScalar, mode: Mode) -> String {
    match mode {
        Mode::Exact => r.to_string(),
        Mode::Float => format_f64(r.to_f64()),
    }
}

fn rational_text(r: &Rational, mode: Mode) -> String {
    match mode {
        Mode::Exact => r.to_string(),
        Mode::Float => format_f64(r.to_f64()),
    }
}

#[derive(Serialize)]
struct EvalRecord {
    family: &'static str,
    params: String,
    degrees: Vec<usize>,
    point: Vec<usize>,
    mode: &'static str,
    value: String,
    normalized: String,
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Exact => "exact",
        Mode::Float => "float",
    }
}

/// `value` is the unnormalized polynomial; `normalized` divides it by the square root of its norm.
pub fn eval(args: &EvalArgs) -> Result<Output, Usage> {
    let s = &args.shared;
    let degrees = parse_list(&args.degrees, "--degrees")?;
    let point = parse_list(&args.point, "--point")?;
    let (family, params, value, normalized) = match args.family {
        Family::Hahn1 => {
            let p = uni_params(s)?;
            expect_len(&degrees, 1, "--degrees")?;
            expect_len(&point, 1, "--point")?;
            if point[0] > p.n {
                return Err(format!("point {} with N={} is outside the grid", point[0], p.n));
            }
            let h = hahn_uni::hahn_eval(degrees[0], point[0] as i64, &p).map_err(usage)?;
            let lam = hahn_uni::hahn_norm(degrees[0], &p).map_err(usage)?;
            let q = RadicalScalar::new(h.clone(), lam.recip()).map_err(usage)?;
            ("hahn1", format!("alpha={} beta={} N={}", p.alpha, p.beta, p.n), h, q)
        }
        Family::Hahn2 => {
            let p = bi_params(s)?;
            expect_len(&degrees, 2, "--degrees")?;
            expect_len(&point, 2, "--point")?;
            let d = DegreePair { m: degrees[0], n: degrees[1] };
            let g = GridPoint { i: point[0], k: point[1] };
            let v = hahn_bi::p2_eval(d, g, &p).map_err(usage)?;
            let q = hahn_bi::q2_eval(d, g, &p).map_err(usage)?;
            ("hahn2", p.label(), v, q)
        }
        Family::Hahnd => {
            let p = multi_params(s)?;
            let (n, i) = (MultiIndex(degrees.clone()), MultiIndex(point.clone()));
            let v = hahn_multi::mv_p_eval(&n, &i, &p).map_err(usage)?;
            let lam = hahn_multi::mv_lambda(&n, &p).map_err(usage)?;
            let q = RadicalScalar::new(v.clone(), lam.recip()).map_err(usage)?;
            ("hahnd", p.label(), v, q)
        }
    };
    let rec = EvalRecord {
        family,
        params,
        degrees: degrees.clone(),
        point: point.clone(),
        mode: mode_name(s.mode),
        value: rational_text(&value, s.mode),
        normalized: radical_text(&normalized, s.mode),
    };
    let text = match s.format {
        Format::Json => render::to_json(&rec),
        Format::Csv => {
            let mut w = render::csv_writer();
            w.write_record(["family", "params", "degrees", "point", "mode", "value", "normalized"]).map_err(usage)?;
            w.write_record([
                rec.family,
                &rec.params,
                &label_list(&degrees),
                &label_list(&point),
                rec.mode,
                &rec.value,
                &rec.normalized,
            ])
            .map_err(usage)?;
            render::finish_csv(w)
        }
    };
    Ok(Output::ok(text))
}

#[derive(Serialize)]
struct TableDoc<'a> {
    params: String,
    rows: &'a [String],
    cols: &'a [String],
    entries: &'a [String],
    mode: &'static str,
}

fn emit_table(params: String, table: &Table, mode: Mode, format: Format) -> Result<String, Usage> {
    Ok(match format {
        Format::Json => render::to_json(&TableDoc {
            params,
            rows: &table.rows,
            cols: &table.cols,
            entries: &table.entries,
            mode: mode_name(mode),
        }),
        Format::Csv => {
            let mut w = render::csv_writer();
            table.write_csv(&mut w).map_err(usage)?;
            render::finish_csv(w)
        }
    })
}

fn grid_labels(level: usize) -> Vec<String> {
    grid_points(level).iter().map(|g| label2(g.i, g.k)).collect()
}

fn degree_labels(level: usize) -> Vec<String> {
    hahn_bi::degree_pairs(level).iter().map(|d| label2(d.m, d.n)).collect()
}

pub fn overlap(s: &Shared) -> Result<Output, Usage> {
    let p = bi_params(s)?;
    let mode = match s.mode {
        Mode::Exact => OverlapMode::Radical,
        Mode::Float => OverlapMode::Float,
    };
    let m = overlap2(&p, mode);
    let table = Table::new(grid_labels(p.n), degree_labels(p.n), m.entry_strings());
    Ok(Output::ok(emit_table(p.label(), &table, s.mode, s.format)?))
}

fn float_table(m: &FloatMatrix, rows: Vec<String>, cols: Vec<String>) -> Table {
    Table::new(rows, cols, m.data.iter().map(|x| format_f64(*x)).collect())
}

#[derive(Serialize)]
struct ChainDoc<'a> {
    params: String,
    mode: &'static str,
    cart_to_cyl: &'a Table,
    cyl_to_sph: &'a Table,
}

/// Always floating: the factors carry square roots of unrelated radicands.
pub fn chain(s: &Shared) -> Result<Output, Usage> {
    let p = bi_params(s)?;
    let (a, b) = chain_matrices(&p);
    let cyl: Vec<String> = cylindrical_labels(p.n).iter().map(|&(x, y)| label2(x, y)).collect();
    let first = float_table(&a, grid_labels(p.n), cyl.clone());
    let second = float_table(&b, cyl, degree_labels(p.n));
    let text = match s.format {
        Format::Json => render::to_json(&ChainDoc { params: p.label(), mode: "float", cart_to_cyl: &first, cyl_to_sph: &second }),
        Format::Csv => {
            let mut parts = Vec::new();
            for t in [&first, &second] {
                let mut w = render::csv_writer();
                t.write_csv(&mut w).map_err(usage)?;
                parts.push(render::finish_csv(w));
            }
            parts.join("\n")
        }
    };
    Ok(Output::ok(text))
}

/// Two parameters: coefficients of `tʲ` in the univariate generating function, rows `x`.
/// Three parameters: coefficients of `z₁^{x₁} z₂^{x₂}`, rows `m.n`, columns `x₁.x₂`.
pub fn genfun(s: &Shared) -> Result<Output, Usage> {
    let a = parse_alpha(s)?;
    match a.len() {
        2 => {
            let p = uni_params(s)?;
            let rows: Vec<String> = (0..=p.n).map(|x| x.to_string()).collect();
            let mut entries = Vec::new();
            for x in 0..=p.n {
                let f = genfun_series(x, &p);
                entries.extend((0..=p.n).map(|j| rational_text(&f.coeff(j, 0), s.mode)));
            }
            let params = format!("alpha={} beta={} N={}", p.alpha, p.beta, p.n);
            Ok(Output::ok(emit_table(params, &Table::new(rows.clone(), rows, entries), s.mode, s.format)?))
        }
        3 => {
            let p = bi_params(s)?;
            let mut entries = Vec::new();
            for d in hahn_bi::degree_pairs(p.n) {
                let f = genfun_polynomial(d.m, d.n, &p);
                entries.extend(grid_points(p.n).iter().map(|g| rational_text(&f.coeff(g.i, g.k), s.mode)));
            }
            let table = Table::new(degree_labels(p.n), grid_labels(p.n), entries);
            Ok(Output::ok(emit_table(p.label(), &table, s.mode, s.format)?))
        }
        n => Err(format!("--alpha needs 2 or 3 comma-separated values, got {n}")),
    }
}

fn single_run(args: &VerifyArgs, opts: &VerifyOptions) -> Result<Vec<VerificationReport>, Usage> {
    let s = &args.shared;
    let check = args.check.as_deref();
    let report = match args.suite {
        Suite::Uni => hahn_uni::verify_uni(check, &uni_params(s)?).map_err(usage)?,
        Suite::Bi => hahn_bi::verify_bi(check, &bi_params(s)?, opts).map_err(usage)?,
        Suite::Oracle => verify_oracle(check, &bi_params(s)?, opts).map_err(usage)?,
        Suite::Mv => {
            let mut r = hahn_multi::verify_mv(&multi_params(s)?);
            if let Some(c) = check {
                r.checks.retain(|x| x.name == c);
                if r.checks.is_empty() {
                    return Err(format!("unknown check '{c}'"));
                }
                r = VerificationReport::new(&r.suite, r.params, r.checks);
            }
            r
        }
        Suite::Classical => {
            let a = parse_alpha(s)?;
            expect_len(&a, 2, "--alpha")?;
            let n = parse_level(s)?;
            let names: Vec<&str> = match check {
                Some(c) => vec![c],
                None => classical::CLASSICAL_RELATIONS.to_vec(),
            };
            let mut checks = Vec::new();
            for c in names {
                checks.extend(classical::verify_classical(c, n, &a[0], &a[1]).map_err(usage)?.checks);
            }
            VerificationReport::new("classical", format!("alpha={} beta={} n={n}", a[0], a[1]), checks)
        }
        Suite::All => return Err("--suite all runs the lattice sweep; omit --alpha and --N".to_string()),
    };
    Ok(vec![report])
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Uni => "uni",
        Suite::Bi => "bi",
        Suite::Mv => "mv",
        Suite::Oracle => "oracle",
        Suite::Classical => "classical",
        Suite::All => "all",
    }
}

pub fn verify(args: &VerifyArgs) -> Result<Output, Usage> {
    let s = &args.shared;
    let opts = VerifyOptions { tol: parse_tol(s)?, perturb: args.perturb };
    let reports = match (&s.alpha, s.n) {
        (None, None) => {
            if args.check.is_some() {
                return Err("--check requires --alpha and --N".to_string());
            }
            let sizes = SweepSizes::default();
            let timed = match args.suite {
                Suite::All => sweeps::sweep_all(&sizes, &opts),
                other => sweeps::sweep_suite(suite_name(other), &sizes, &opts),
            };
            timed.into_iter().map(|t| t.report).collect()
        }
        (Some(_), Some(_)) => single_run(args, &opts)?,
        _ => return Err("--alpha and --N must be given together".to_string()),
    };
    let failure = first_failure(&reports);
    let text = match s.format {
        Format::Json => render::reports_json(&reports),
        Format::Csv => render::reports_csv(&reports),
    };
    Ok(Output { text, failure })
}
