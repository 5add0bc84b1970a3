use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// Rows of strings rendered as aligned text or CSV.
#[derive(Debug, Clone)]
pub struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: ToString>(headers: &[S]) -> Self {
        Table {
            headers: headers.iter().map(ToString::to_string).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn text(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        // numbers right-aligned, anything else left-aligned
        let numeric: Vec<bool> = (0..widths.len())
            .map(|c| {
                self.rows
                    .iter()
                    .all(|r| r[c] == "-" || r[c].parse::<i128>().is_ok())
            })
            .collect();
        let mut out = String::new();
        let line = |out: &mut String, cells: &[String]| {
            let mut s = String::new();
            for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                let pad = " ".repeat(w - cell.chars().count());
                if numeric[i] {
                    s.push_str(&pad);
                    s.push_str(cell);
                } else {
                    s.push_str(cell);
                    s.push_str(&pad);
                }
            }
            out.push_str(s.trim_end());
            out.push('\n');
        };
        line(&mut out, &self.headers);
        line(&mut out, &self.rows_rule(&widths));
        for row in &self.rows {
            line(&mut out, row);
        }
        out
    }

    fn rows_rule(&self, widths: &[usize]) -> Vec<String> {
        widths.iter().map(|&w| "-".repeat(w)).collect()
    }

    pub fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("write to memory");
        for row in &self.rows {
            w.write_record(row).expect("write to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 input")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            _ => self.text(),
        }
    }
}

/// Key/value block for scalar summaries.
pub fn key_values(pairs: &[(&str, String)], format: Format) -> String {
    let mut t = Table::new(&["quantity", "value"]);
    for (k, v) in pairs {
        t.push(vec![k.to_string(), v.clone()]);
    }
    t.render(format)
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// Joins rendered sections with a blank line.
pub fn sections(parts: &[String]) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = write!(out, "{p}");
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        }
    }
}

/// A claim compared against computation.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub claim: String,
    pub predicted: String,
    pub computed: String,
    pub status: Status,
}

impl Check {
    pub fn new(
        claim: impl Into<String>,
        predicted: impl ToString,
        computed: impl ToString,
    ) -> Self {
        let (predicted, computed) = (predicted.to_string(), computed.to_string());
        let status = Status::from_bool(predicted == computed);
        Check {
            claim: claim.into(),
            predicted,
            computed,
            status,
        }
    }

    pub fn flag(claim: impl Into<String>, ok: bool) -> Self {
        Check::new(claim, true, ok)
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != Status::Fail)
}

pub fn checks_table(checks: &[Check]) -> Table {
    let mut t = Table::new(&["claim", "predicted", "computed", "status"]);
    for c in checks {
        t.push(vec![
            c.claim.clone(),
            c.predicted.clone(),
            c.computed.clone(),
            c.status.as_str().to_string(),
        ]);
    }
    t
}
