use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::io::read_qnd;
use crate::quandle::QuandleClassReport;
use crate::structure::{conjecture_report, ConjectureVerdict};

pub const SCHEMA: u32 = 1;

/// Result of analysing one `.qnd` file. Everything except `elapsed_ms` is
/// a function of the file contents.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRecord {
    pub schema: u32,
    pub path: PathBuf,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<QuandleClassReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<ConjectureVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub elapsed_ms: f64,
}

impl ScanRecord {
    pub fn is_counterexample(&self) -> bool {
        self.conjecture
            .as_ref()
            .is_some_and(|c| c.counterexample_i || c.counterexample_ii)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ScanSummary {
    pub schema: u32,
    pub files: usize,
    pub errors: usize,
    pub superconnected: usize,
    pub counterexamples: usize,
}

pub fn analyse_file(path: &Path, conjecture: bool) -> ScanRecord {
    let start = Instant::now();
    let mut record = ScanRecord {
        schema: SCHEMA,
        path: path.to_path_buf(),
        report: None,
        conjecture: None,
        error: None,
        elapsed_ms: 0.0,
    };
    match read_qnd(path) {
        Err(e) => record.error = Some(e.to_string()),
        Ok(q) => {
            let report = QuandleClassReport::of(&q);
            if !report.is_quandle {
                record.error = Some(format!("not a quandle: {}", report.classification));
            } else if conjecture {
                record.conjecture = Some(conjecture_report(&q));
            }
            record.report = Some(report);
        }
    }
    record.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    record
}

/// `.qnd` files directly inside `dir`, sorted by path.
pub fn qnd_files(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "qnd") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Analyses every `.qnd` file in `dir` in parallel; records come back in
/// path order.
pub fn scan_dir(dir: &Path, conjecture: bool) -> std::io::Result<(Vec<ScanRecord>, ScanSummary)> {
    let files = qnd_files(dir)?;
    let records: Vec<ScanRecord> = files.par_iter().map(|p| analyse_file(p, conjecture)).collect();
    let summary = ScanSummary {
        schema: SCHEMA,
        files: records.len(),
        errors: records.iter().filter(|r| r.error.is_some()).count(),
        superconnected: records
            .iter()
            .filter(|r| r.error.is_none() && r.report.as_ref().is_some_and(|q| q.superconnected))
            .count(),
        counterexamples: records.iter().filter(|r| r.is_counterexample()).count(),
    };
    Ok((records, summary))
}
