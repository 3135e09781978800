//! CSV and JSON reports.
//!
//! CSV carries one row per reported graph under the fixed header
//! [`CSV_HEADER`]. JSON wraps the same rows with the sweep totals and the
//! per-order minimum energy ratios. Rows are sorted by `(order, code)` and
//! no timing is written, so reruns produce identical bytes.

use crate::config::{Format, RunConfig};
use crate::sweep::{OrderStats, VerifyOutcome};
use c4energy_core::EnergyReport;
use serde::{Deserialize, Serialize};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use thiserror::Error;

pub const CSV_HEADER: [&str; 8] = ["sweep", "order", "edges", "canonical_code", "energy", "mu1", "deficit", "status"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Exception,
    Borderline,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub sweep: String,
    pub order: usize,
    pub edges: usize,
    pub canonical_code: String,
    pub energy: f64,
    pub mu1: f64,
    pub deficit: f64,
    pub status: Status,
}

impl Row {
    fn new(sweep: &str, r: &EnergyReport, status: Status) -> Row {
        Row {
            sweep: sweep.to_owned(),
            order: r.order,
            edges: r.edges,
            canonical_code: r.label.clone(),
            energy: r.energy,
            mu1: r.mu1,
            deficit: r.deficit,
            status,
        }
    }
}

/// Everything a report file holds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub sweep: String,
    pub max_order: usize,
    pub total: u64,
    pub skipped: u64,
    pub exceptions: usize,
    pub borderline: usize,
    pub max_moment_residual: f64,
    pub min_deficit: Option<f64>,
    pub orders: Vec<OrderStats>,
    pub rows: Vec<Row>,
}

impl Report {
    pub fn from_outcome(o: &VerifyOutcome) -> Report {
        let sweep = o.kind.to_string();
        let mut rows: Vec<Row> = o
            .counterexamples
            .iter()
            .map(|r| Row::new(&sweep, r, Status::Exception))
            .chain(o.borderline.iter().map(|r| Row::new(&sweep, r, Status::Borderline)))
            .chain(o.passes.iter().map(|r| Row::new(&sweep, r, Status::Pass)))
            .collect();
        rows.sort_by(|a, b| (a.order, &a.canonical_code).cmp(&(b.order, &b.canonical_code)));
        Report {
            sweep,
            max_order: o.max_order,
            total: o.total,
            skipped: o.skipped,
            exceptions: o.counterexamples.len(),
            borderline: o.borderline.len(),
            max_moment_residual: o.max_moment_residual,
            min_deficit: o.min_deficit,
            orders: o.orders.clone(),
            rows,
        }
    }

    pub fn write_to<W: Write>(&self, format: Format, w: W) -> io::Result<()> {
        match format {
            Format::Csv => write_rows(&self.rows, w),
            Format::Json => {
                let mut w = w;
                serde_json::to_writer_pretty(&mut w, self)?;
                writeln!(w)?;
                w.flush()
            }
        }
    }
}

/// Writes rows under [`CSV_HEADER`]; an empty slice gives the header alone.
pub fn write_rows<W: Write>(rows: &[Row], w: W) -> io::Result<()> {
    let mut csv = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    csv.write_record(CSV_HEADER)?;
    for r in rows {
        csv.serialize(r)?;
    }
    csv.flush()
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("cannot write report to {}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
}

/// Writes the report to `cfg.out`, or to stdout when no path is set.
pub fn write_report(outcome: &VerifyOutcome, cfg: &RunConfig) -> Result<(), ReportError> {
    let report = Report::from_outcome(outcome);
    match &cfg.out {
        Some(path) => File::create(path)
            .and_then(|f| report.write_to(cfg.format, BufWriter::new(f)))
            .map_err(|source| ReportError::Io { path: path.clone(), source }),
        None => report
            .write_to(cfg.format, io::stdout().lock())
            .map_err(|source| ReportError::Io { path: PathBuf::from("<stdout>"), source }),
    }
}
