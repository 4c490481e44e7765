//! Suite reports as JSON or text.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io;
use std::path::Path;

use qsv_core::rational::render;
use qsv_core::verify::VerificationReport;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunInfo {
    pub seed: u64,
    pub order: i64,
    pub n_max: i64,
    pub timestamp: String,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub id: String,
    pub mode: String,
    /// Rationals as `p/q` strings.
    pub binding: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    pub status: String,
    pub metric: String,
    pub duration_ms: u64,
    pub heuristic_tail: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub run: RunInfo,
    pub results: Vec<ResultRecord>,
}

impl From<&VerificationReport> for ResultRecord {
    fn from(r: &VerificationReport) -> Self {
        ResultRecord {
            id: r.id.clone(),
            mode: r.mode.as_str().to_string(),
            binding: r.binding.iter().map(|(k, v)| (k.to_string(), render(v))).collect(),
            n: r.n,
            status: r.status.as_str().to_string(),
            metric: r.metric_text(),
            duration_ms: r.duration_ms,
            heuristic_tail: r.heuristic_tail,
        }
    }
}

impl Report {
    pub fn new(run: RunInfo, reports: &[VerificationReport]) -> Self {
        Report { run, results: reports.iter().map(ResultRecord::from).collect() }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// One line per result, then a totals line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let (mut pass, mut fail, mut skipped) = (0, 0, 0);
        for r in &self.results {
            match r.status.as_str() {
                "pass" => pass += 1,
                "fail" => fail += 1,
                _ => skipped += 1,
            }
            let binding: Vec<String> = r.binding.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let n = r.n.map(|n| format!(" N={n}")).unwrap_or_default();
            let _ = writeln!(
                out,
                "{:<7} {:<28} {:<8}{} [{}] {}",
                r.status.to_uppercase(),
                r.id,
                r.mode,
                n,
                binding.join(", "),
                r.metric
            );
        }
        let _ = writeln!(out, "{pass} passed, {fail} failed, {skipped} skipped");
        out
    }
}

/// Writes `text` to `path`, or to standard output when `path` is `None`.
pub fn emit(text: &str, path: Option<&Path>) -> io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", p.display()))),
        None => {
            use io::Write;
            io::stdout().lock().write_all(text.as_bytes())
        }
    }
}
