use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Summary of one experiment cell.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellStats {
    pub best: f64,
    pub worst: f64,
    pub median: f64,
    pub mean: f64,
    /// Sample standard deviation (divisor `n - 1`); 0 for a single run.
    pub sd: f64,
}

pub fn summarize(values: &[f64]) -> Result<CellStats> {
    if values.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    let median = if n % 2 == 1 { sorted[n / 2] } else { (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0 };
    // the mean of equal values can round one ulp outside them
    let mean = (sorted.iter().sum::<f64>() / n as f64).clamp(sorted[0], sorted[n - 1]);
    let sd = if n > 1 {
        let ss: f64 = sorted.iter().map(|v| (v - mean) * (v - mean)).sum();
        (ss / (n - 1) as f64).sqrt()
    } else {
        0.0
    };
    Ok(CellStats { best: sorted[0], worst: sorted[n - 1], median, mean, sd })
}
