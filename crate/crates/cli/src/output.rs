use std::fmt::Write as _;

use landen_core::Error;
use serde::Serialize;

pub const EXIT_PARSE: u8 = 1;
pub const EXIT_DOMAIN: u8 = 2;
pub const EXIT_PRECISION: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn parse(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_PARSE,
            message: msg.into(),
        }
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_DOMAIN,
            message: msg.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::PrecisionNotReached { .. } => EXIT_PRECISION,
            _ => EXIT_DOMAIN,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct Suite {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Serialize, Debug)]
pub struct FamilyRecord {
    pub p: usize,
    pub free: Vec<usize>,
    pub bound: Vec<usize>,
    pub offset: Vec<String>,
    pub matrix: Vec<Vec<String>>,
}

/// One machine-readable record per job. The first eight fields are always
/// present (possibly null); the rest only for the commands that fill them.
#[derive(Serialize, Debug)]
pub struct Record {
    pub command: &'static str,
    pub closed_form: Option<String>,
    pub decimal: Option<String>,
    pub digits: u32,
    pub method: Option<&'static str>,
    pub iterations: Option<usize>,
    #[serde(rename = "L")]
    pub limit: Option<String>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numerator: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub denominator: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trajectory: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suites: Option<Vec<Suite>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Record {
    pub fn new(command: &'static str, digits: u32) -> Self {
        Record {
            command,
            closed_form: None,
            decimal: None,
            digits,
            method: None,
            iterations: None,
            limit: None,
            status: "ok".into(),
            verdict: None,
            path: None,
            numerator: None,
            denominator: None,
            power: None,
            trajectory: None,
            family: None,
            suites: None,
            error: None,
        }
    }

    /// `key  value` lines for the scalar fields that are set.
    pub fn summary(&self) -> String {
        let mut rows: Vec<(&str, String)> = Vec::new();
        if let Some(v) = self.verdict {
            rows.push(("verdict", v.into()));
        }
        if let Some(p) = &self.path {
            rows.push(("path", p.join(" -> ")));
        }
        if let Some(c) = &self.closed_form {
            rows.push(("closed form", c.clone()));
        }
        if let Some(d) = &self.decimal {
            rows.push(("decimal", d.clone()));
        }
        if let Some(l) = &self.limit {
            rows.push(("L", l.clone()));
        }
        if let Some(m) = self.method {
            rows.push(("method", m.into()));
        }
        if let Some(i) = self.iterations {
            rows.push(("iterations", i.to_string()));
        }
        if let Some(n) = &self.numerator {
            rows.push(("numerator", n.join(",")));
        }
        if let Some(d) = &self.denominator {
            rows.push(("denominator", d.join(",")));
        }
        if let Some(p) = self.power {
            rows.push(("power", p.to_string()));
        }
        rows.push(("status", self.status.clone()));
        if let Some(e) = &self.error {
            rows.push(("error", e.clone()));
        }
        let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out
    }
}

pub struct Report {
    pub record: Record,
    /// Human-readable rendering for `--format table`.
    pub table: String,
    pub code: u8,
    /// Diagnostic for stderr.
    pub message: Option<String>,
}

impl Report {
    pub fn ok(record: Record) -> Self {
        let table = record.summary();
        Report {
            record,
            table,
            code: 0,
            message: None,
        }
    }

    pub fn failure(command: &'static str, digits: u32, e: CliError) -> Self {
        let mut record = Record::new(command, digits);
        record.status = "error".into();
        record.error = Some(e.message.clone());
        Report {
            table: record.summary(),
            record,
            code: e.code,
            message: Some(e.message),
        }
    }
}
