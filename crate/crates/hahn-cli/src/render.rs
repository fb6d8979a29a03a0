//! Deterministic CSV and JSON emission.

use serde::Serialize;

use hahn_core::report::Status;
use hahn_core::VerificationReport;

/// Labelled row-major table of decimal or rational strings.
#[derive(Serialize, Debug)]
pub struct Table {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<String>,
}

impl Table {
    /// `entries.len()` must equal `rows.len() * cols.len()`.
    pub fn new(rows: Vec<String>, cols: Vec<String>, entries: Vec<String>) -> Self {
        debug_assert_eq!(entries.len(), rows.len() * cols.len());
        Table { rows, cols, entries }
    }

    /// Header row of column labels under an empty corner cell, then one row per label.
    pub fn write_csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        let mut header = vec![String::new()];
        header.extend(self.cols.iter().cloned());
        w.write_record(&header)?;
        for (r, label) in self.rows.iter().enumerate() {
            let mut rec = vec![label.clone()];
            rec.extend(self.entries[r * self.cols.len()..(r + 1) * self.cols.len()].iter().cloned());
            w.write_record(&rec)?;
        }
        Ok(())
    }
}

pub fn label2(a: usize, b: usize) -> String {
    format!("{a}.{b}")
}

pub fn label_list(xs: &[usize]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(".")
}

pub fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().flexible(true).from_writer(Vec::new())
}

pub fn finish_csv(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 records")
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ReportSet<'a> {
    status: Status,
    reports: &'a [VerificationReport],
}

pub fn reports_json(reports: &[VerificationReport]) -> String {
    let status = if reports.iter().all(VerificationReport::passed) { Status::Pass } else { Status::Fail };
    to_json(&ReportSet { status, reports })
}

/// One line per check.
pub fn reports_csv(reports: &[VerificationReport]) -> String {
    let mut w = csv_writer();
    w.write_record(["suite", "params", "check", "status", "max_residual", "at", "lhs", "rhs", "data"]).expect("in-memory");
    for r in reports {
        for c in &r.checks {
            let status = if c.passed() { "pass" } else { "fail" };
            let (at, lhs, rhs) = c
                .counterexample
                .as_ref()
                .map_or((String::new(), String::new(), String::new()), |x| (x.at.clone(), x.lhs.clone(), x.rhs.clone()));
            let data = c.data.join(" ");
            w.write_record([&r.suite, &r.params, &c.name, status, &c.max_residual, &at, &lhs, &rhs, &data])
                .expect("in-memory");
        }
    }
    finish_csv(w)
}
