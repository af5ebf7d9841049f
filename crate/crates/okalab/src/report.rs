//! Report assembly for suite runs.
//!
//! A report carries a versioned schema, the run parameters, the result rows
//! in canonical order, and a status summary. Serialization omits timing, so
//! two runs over the same inputs produce byte-identical reports regardless
//! of thread count or machine load. The text rendering is lossless with
//! respect to statuses and witnesses.

use serde::Serialize;
use serde_json::Value;

use crate::error::Result;
use crate::suite::{SuiteResult, SuiteStatus, SUITE_IDS};

pub const REPORT_SCHEMA: &str = "okalab-report/1";

#[derive(Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub degenerate: usize,
    pub skipped_cap: usize,
}

#[derive(Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub cap: u64,
    pub suites: Vec<String>,
    pub results: Vec<SuiteResult>,
    pub summary: Summary,
}

fn suite_rank(id: &str) -> usize {
    SUITE_IDS.iter().position(|s| *s == id).unwrap_or(SUITE_IDS.len())
}

/// Build a report from raw rows. Rows are sorted by the canonical key:
/// per-ring rows first, ordered by (ring, suite), then whole-catalog
/// aggregate rows ordered by suite. Witness lists already carry ideals in
/// ascending index order.
pub fn assemble(ids: &[&str], cap: u64, mut rows: Vec<SuiteResult>) -> Report {
    rows.sort_by(|a, b| {
        let key_a = (a.ring == "catalog", a.ring.clone(), suite_rank(&a.suite));
        let key_b = (b.ring == "catalog", b.ring.clone(), suite_rank(&b.suite));
        key_a.cmp(&key_b)
    });
    let mut summary = Summary { pass: 0, fail: 0, degenerate: 0, skipped_cap: 0 };
    for row in &rows {
        match row.status {
            SuiteStatus::Pass => summary.pass += 1,
            SuiteStatus::Fail => summary.fail += 1,
            SuiteStatus::Degenerate => summary.degenerate += 1,
            SuiteStatus::SkippedCap => summary.skipped_cap += 1,
        }
    }
    Report {
        schema: REPORT_SCHEMA,
        cap,
        suites: ids.iter().map(|s| s.to_string()).collect(),
        results: rows,
        summary,
    }
}

pub fn to_json(report: &Report) -> Result<String> {
    Ok(serde_json::to_string_pretty(report)?)
}

fn witness_line(w: &Value) -> String {
    // serde_json's map is ordered by key, so this line is canonical.
    serde_json::to_string(w).unwrap_or_else(|_| "<unrenderable>".to_string())
}

pub fn to_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("okalab suite report ({}), cap {}\n", report.schema, report.cap));
    out.push_str(&format!("suites: {}\n\n", report.suites.join(", ")));
    let ring_width = report
        .results
        .iter()
        .map(|r| r.ring.len())
        .chain(std::iter::once("ring".len()))
        .max()
        .unwrap_or(4);
    out.push_str(&format!("{:<ring_width$}  {:<5} {:<11} detail\n", "ring", "suite", "status"));
    for row in &report.results {
        out.push_str(&format!(
            "{:<ring_width$}  {:<5} {:<11} {}\n",
            row.ring,
            row.suite,
            row.status.as_str(),
            row.detail
        ));
        for w in &row.witnesses {
            out.push_str(&format!("{:<ring_width$}    witness: {}\n", "", witness_line(w)));
        }
    }
    let s = &report.summary;
    out.push_str(&format!(
        "\nsummary: {} pass, {} fail, {} degenerate, {} skipped-cap\n",
        s.pass, s.fail, s.degenerate, s.skipped_cap
    ));
    out
}

/// Process exit code for a finished run. Failures dominate; under strict
/// mode degenerate rows count as failures and a clean run that skipped
/// rings over the cap signals the cap instead of success.
pub fn exit_code(report: &Report, strict: bool) -> i32 {
    let s = &report.summary;
    if s.fail > 0 || (strict && s.degenerate > 0) {
        1
    } else if strict && s.skipped_cap > 0 {
        3
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn row(ring: &str, suite: &str, status: SuiteStatus) -> SuiteResult {
        SuiteResult {
            suite: suite.to_string(),
            ring: ring.to_string(),
            status,
            detail: format!("{suite} on {ring}"),
            witnesses: Vec::new(),
            millis: 7,
        }
    }

    #[test]
    fn assembly_sorts_canonically_and_counts() {
        let rows = vec![
            row("ut2_gf2", "T7", SuiteStatus::Pass),
            row("catalog", "T8", SuiteStatus::Degenerate),
            row("gf2", "T1", SuiteStatus::SkippedCap),
            row("ut2_gf2", "T1", SuiteStatus::Fail),
        ];
        let report = assemble(&["T1", "T7", "T8"], 4096, rows);
        let keys: Vec<(String, String)> =
            report.results.iter().map(|r| (r.ring.clone(), r.suite.clone())).collect();
        assert_eq!(
            keys,
            vec![
                ("gf2".into(), "T1".into()),
                ("ut2_gf2".into(), "T1".into()),
                ("ut2_gf2".into(), "T7".into()),
                ("catalog".into(), "T8".into()),
            ]
        );
        assert_eq!(report.summary.pass, 1);
        assert_eq!(report.summary.fail, 1);
        assert_eq!(report.summary.degenerate, 1);
        assert_eq!(report.summary.skipped_cap, 1);
    }

    #[test]
    fn json_omits_timing_and_keeps_witnesses() {
        let mut r = row("gf2", "T1", SuiteStatus::Fail);
        r.witnesses.push(json!({ "ideal": 3, "dim": 1 }));
        let report = assemble(&["T1"], 64, vec![r]);
        let text = to_json(&report).unwrap();
        assert!(!text.contains("millis"));
        assert!(text.contains("\"ideal\": 3"));
        assert!(text.contains("okalab-report/1"));
    }

    #[test]
    fn text_rendering_is_lossless_for_status_and_witnesses() {
        let mut fail = row("gf2", "T1", SuiteStatus::Fail);
        fail.witnesses.push(json!({ "ideal": 2 }));
        let rows = vec![fail, row("gf4", "T1", SuiteStatus::Degenerate)];
        let report = assemble(&["T1"], 64, rows);
        let text = to_text(&report);
        assert!(text.contains("fail"));
        assert!(text.contains("degenerate"));
        assert!(text.contains("witness: {\"ideal\":2}"));
        assert!(text.contains("summary: 0 pass, 1 fail, 1 degenerate, 0 skipped-cap"));
    }

    #[test]
    fn exit_codes_follow_the_contract() {
        let clean = assemble(&["T1"], 64, vec![row("gf2", "T1", SuiteStatus::Pass)]);
        assert_eq!(exit_code(&clean, false), 0);
        assert_eq!(exit_code(&clean, true), 0);
        let failed = assemble(&["T1"], 64, vec![row("gf2", "T1", SuiteStatus::Fail)]);
        assert_eq!(exit_code(&failed, false), 1);
        let degen = assemble(&["T1"], 64, vec![row("gf2", "T1", SuiteStatus::Degenerate)]);
        assert_eq!(exit_code(&degen, false), 0);
        assert_eq!(exit_code(&degen, true), 1);
        let skipped = assemble(&["T1"], 64, vec![row("gf2", "T1", SuiteStatus::SkippedCap)]);
        assert_eq!(exit_code(&skipped, false), 0);
        assert_eq!(exit_code(&skipped, true), 3);
    }
}
