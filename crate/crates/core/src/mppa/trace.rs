//! Step-size traces of the three runner types and their histograms.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The three perturbations, in cascade order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Runner {
    /// `y = x + beta x`
    SelfScaled,
    /// `y = x + beta b`
    UpperScaled,
    /// `y = x + beta a`
    LowerScaled,
}

impl Runner {
    pub const CASCADE: [Runner; 3] = [Runner::SelfScaled, Runner::UpperScaled, Runner::LowerScaled];

    /// Equation label used in trace files (5, 6, 7).
    pub fn equation(self) -> u8 {
        match self {
            Runner::SelfScaled => 5,
            Runner::UpperScaled => 6,
            Runner::LowerScaled => 7,
        }
    }

    pub fn from_equation(eq: u8) -> Option<Self> {
        match eq {
            5 => Some(Runner::SelfScaled),
            6 => Some(Runner::UpperScaled),
            7 => Some(Runner::LowerScaled),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub generation: u64,
    pub runner: Runner,
    /// `|y_j - x_j|` after clamping.
    pub magnitude: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PerturbationTrace {
    records: Vec<TraceRecord>,
}

impl PerturbationTrace {
    pub fn records(&self) -> &[TraceRecord] {
        &self.records
    }

    pub fn push(&mut self, record: TraceRecord) {
        self.records.push(record);
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub(crate) fn record_step(&mut self, generation: u64, runner: Runner, from: &[f64], to: &[f64]) {
        self.records.extend(from.iter().zip(to).map(|(x, y)| TraceRecord {
            generation,
            runner,
            magnitude: (y - x).abs(),
        }));
    }

    pub fn magnitudes(&self, runner: Runner) -> impl Iterator<Item = f64> + '_ {
        self.records.iter().filter(move |r| r.runner == runner).map(|r| r.magnitude)
    }

    pub fn last_generation(&self) -> u64 {
        self.records.iter().map(|r| r.generation).max().unwrap_or(0)
    }
}

/// Mean magnitude of `runner` steps taken in generations `[from, to]`.
pub fn phase_mean(trace: &PerturbationTrace, runner: Runner, from: u64, to: u64) -> Option<f64> {
    let (sum, n) = trace
        .records()
        .iter()
        .filter(|r| r.runner == runner && r.generation >= from && r.generation <= to)
        .fold((0.0, 0u64), |(s, n), r| (s + r.magnitude, n + 1));
    (n > 0).then(|| sum / n as f64)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HistogramBin {
    pub lower: f64,
    pub upper: f64,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquationHistogram {
    pub runner: Runner,
    pub bins: Vec<HistogramBin>,
}

/// One histogram per runner type present in the trace.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceHistogram {
    pub equations: Vec<EquationHistogram>,
}

impl TraceHistogram {
    pub fn get(&self, runner: Runner) -> Option<&EquationHistogram> {
        self.equations.iter().find(|h| h.runner == runner)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(["equation", "bin", "lower", "upper", "count"])?;
        for h in &self.equations {
            for (i, b) in h.bins.iter().enumerate() {
                w.write_record([
                    h.runner.equation().to_string(),
                    i.to_string(),
                    b.lower.to_string(),
                    b.upper.to_string(),
                    b.count.to_string(),
                ])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

/// Equal-width bins on `[0, max]` per runner type, `max` the largest magnitude of that type.
pub fn trace_histogram(trace: &PerturbationTrace, bins: usize) -> Result<TraceHistogram> {
    if trace.is_empty() {
        return Err(Error::EmptyTrace);
    }
    if bins == 0 {
        return Err(Error::InvalidConfig("histogram needs at least one bin".into()));
    }
    let mut equations = Vec::new();
    for runner in Runner::CASCADE {
        let Some(max) = trace.magnitudes(runner).reduce(f64::max) else { continue };
        let width = if max > 0.0 { max / bins as f64 } else { 1.0 };
        let mut counts = vec![0u64; bins];
        for m in trace.magnitudes(runner) {
            let k = ((m / width) as usize).min(bins - 1);
            counts[k] += 1;
        }
        let bins = counts
            .into_iter()
            .enumerate()
            .map(|(i, count)| HistogramBin { lower: i as f64 * width, upper: (i + 1) as f64 * width, count })
            .collect();
        equations.push(EquationHistogram { runner, bins });
    }
    Ok(TraceHistogram { equations })
}

/// Writes `generation,equation,magnitude` rows with a header.
pub fn write_trace_csv<W: Write>(trace: &PerturbationTrace, out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(["generation", "equation", "magnitude"])?;
    for r in trace.records() {
        w.write_record([r.generation.to_string(), r.runner.equation().to_string(), r.magnitude.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_trace_csv<R: Read>(input: R) -> Result<PerturbationTrace> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let mut trace = PerturbationTrace::default();
    for (i, row) in rdr.records().enumerate() {
        let row = row?;
        let line = i + 2;
        let bad = |reason: String| Error::MalformedTrace { line, reason };
        if row.len() != 3 {
            return Err(bad(format!("expected 3 fields, found {}", row.len())));
        }
        let generation = row[0].trim().parse::<u64>().map_err(|e| bad(format!("generation: {e}")))?;
        let eq = row[1].trim().parse::<u8>().map_err(|e| bad(format!("equation: {e}")))?;
        let runner = Runner::from_equation(eq).ok_or_else(|| bad(format!("equation must be 5, 6 or 7, got {eq}")))?;
        let magnitude = row[2].trim().parse::<f64>().map_err(|e| bad(format!("magnitude: {e}")))?;
        if magnitude.is_nan() || magnitude < 0.0 {
            return Err(bad(format!("magnitude must be non-negative, got {magnitude}")));
        }
        trace.push(TraceRecord { generation, runner, magnitude });
    }
    Ok(trace)
}
