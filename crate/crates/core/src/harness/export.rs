use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::{CellKey, ExperimentPlan, ExperimentReport, ReportMetadata};
use crate::error::{Error, Result};
use crate::report::SolverParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            "markdown" | "md" | "markdown-table" => Ok(Self::Markdown),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub const CSV_HEADER: [&str; 11] =
    ["algorithm", "function_id", "function_name", "dim", "runs", "best", "worst", "median", "mean", "sd", "seed_base"];

pub fn export_report(report: &ExperimentReport, format: ReportFormat) -> Result<Vec<u8>> {
    match format {
        ReportFormat::Csv => to_csv(report),
        ReportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(report)?;
            out.push(b'\n');
            Ok(out)
        }
        ReportFormat::Markdown => Ok(to_markdown(report).into_bytes()),
    }
}

fn to_csv(report: &ExperimentReport) -> Result<Vec<u8>> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for c in &report.cells {
        let stat = |f: fn(&super::CellStats) -> f64| c.stats.as_ref().map(|s| f(s).to_string()).unwrap_or_default();
        w.write_record([
            c.algorithm.to_string(),
            c.function_id.to_string(),
            c.function_name.clone(),
            c.dim.to_string(),
            c.runs.to_string(),
            stat(|s| s.best),
            stat(|s| s.worst),
            stat(|s| s.median),
            stat(|s| s.mean),
            stat(|s| s.sd),
            c.seed_base.to_string(),
        ])?;
    }
    w.into_inner().map_err(|e| Error::Io(e.into_error()))
}

fn sci(v: f64) -> String {
    if v == 0.0 {
        "0".into()
    } else {
        format!("{v:.2e}")
    }
}

/// Results table: blank function and dimension cells repeat the row above.
fn to_markdown(report: &ExperimentReport) -> String {
    let mut out = String::from("| Fun | Dim | Algorithm | Best | Worst | Median | Mean | SD |\n");
    out.push_str("|---|---|---|---|---|---|---|---|\n");
    let mut prev: Option<(u32, usize)> = None;
    for c in &report.cells {
        let fun = if prev.map(|p| p.0) == Some(c.function_id) { String::new() } else { c.function_id.to_string() };
        let dim = if prev == Some((c.function_id, c.dim)) { String::new() } else { c.dim.to_string() };
        prev = Some((c.function_id, c.dim));
        let algo = c.algorithm.as_str().to_ascii_uppercase();
        match &c.stats {
            Some(s) => {
                let _ = writeln!(
                    out,
                    "| {fun} | {dim} | {algo} | {} | {} | {} | {} | {} |",
                    sci(s.best),
                    sci(s.worst),
                    sci(s.median),
                    sci(s.mean),
                    sci(s.sd)
                );
            }
            None => {
                let _ = writeln!(out, "| {fun} | {dim} | {algo} | - | - | - | - | - |");
            }
        }
    }
    out
}

#[derive(Serialize)]
struct ResolvedCell {
    #[serde(flatten)]
    key: CellKey,
    max_eval: u64,
    seeds: (u64, u64),
    params_first_run: SolverParams,
}

#[derive(Serialize)]
struct Manifest<'a> {
    tool: &'static str,
    version: &'static str,
    plan: &'a ExperimentPlan,
    metadata: ReportMetadata,
    cells: Vec<ResolvedCell>,
}

/// JSON description of the plan with every default resolved, cell by cell.
pub fn manifest(plan: &ExperimentPlan) -> Result<Vec<u8>> {
    let cells = plan
        .cells()
        .into_iter()
        .map(|key| {
            let first = plan.request(&key, 0);
            let last = plan.base_seed.wrapping_add(plan.runs.saturating_sub(1) as u64);
            ResolvedCell {
                max_eval: first.max_eval,
                seeds: (plan.base_seed, last),
                params_first_run: first.params(),
                key,
            }
        })
        .collect();
    let m = Manifest {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        plan,
        metadata: ReportMetadata::for_plan(plan),
        cells,
    };
    let mut out = serde_json::to_vec_pretty(&m)?;
    out.push(b'\n');
    Ok(out)
}
