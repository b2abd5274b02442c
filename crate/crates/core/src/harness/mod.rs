//! Repeated-run experiments over (algorithm, function, dimension) cells.
//!
//! Run `r` of every cell uses seed `base_seed + r`, so each run depends only
//! on its cell and index. Runs execute on the rayon pool and are gathered
//! back in plan order, which keeps reports identical under any scheduling.

mod export;
mod stats;

pub use export::{export_report, manifest, ReportFormat};
pub use stats::{summarize, CellStats};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abc::DEFAULT_MODIFICATION_RATE;
use crate::benchmarks;
use crate::error::{Error, Result};
use crate::mppa::DEFAULT_RUNNERS;
use crate::report::{Algorithm, RunReport};
use crate::rng::RNG_ALGORITHM;
use crate::solver::{solve, SolveRequest, DEFAULT_EVALS_PER_DIM, DEFAULT_POPULATION};

/// The full experimental design.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentPlan {
    pub algorithms: Vec<Algorithm>,
    pub functions: Vec<u32>,
    /// Dimensions for scalable functions; fixed-size problems always use their own.
    pub dims: Vec<usize>,
    pub runs: usize,
    pub np: usize,
    pub evals_per_dim: u64,
    /// Replaces `evals_per_dim * dim` when set.
    pub max_eval: Option<u64>,
    pub base_seed: u64,
    pub runners: usize,
    pub modification_rate: f64,
}

impl Default for ExperimentPlan {
    fn default() -> Self {
        Self {
            algorithms: vec![Algorithm::Abc, Algorithm::Mabc, Algorithm::Mppa],
            functions: (1..=18).collect(),
            dims: vec![30, 60, 100],
            runs: 30,
            np: DEFAULT_POPULATION,
            evals_per_dim: DEFAULT_EVALS_PER_DIM,
            max_eval: None,
            base_seed: 0,
            runners: DEFAULT_RUNNERS,
            modification_rate: DEFAULT_MODIFICATION_RATE,
        }
    }
}

/// Population used by the 2-D suite.
pub const LOW_DIM_POPULATION: usize = 10;

/// One (algorithm, function, dimension) combination of a plan.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellKey {
    pub algorithm: Algorithm,
    pub function_id: u32,
    pub dim: usize,
}

impl ExperimentPlan {
    /// The 2-D comparison suite: eight fixed problems, 10 runs of 20000 evaluations
    /// with a population of 10.
    pub fn low_dim_suite() -> Self {
        Self {
            algorithms: vec![Algorithm::Ppa, Algorithm::Mppa],
            functions: benchmarks::LOW_DIM_IDS.to_vec(),
            dims: vec![2],
            runs: 10,
            np: LOW_DIM_POPULATION,
            max_eval: Some(20_000),
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.runs < 1 {
            return Err(Error::InvalidConfig("plan: runs must be at least 1".into()));
        }
        if self.algorithms.is_empty() || self.functions.is_empty() {
            return Err(Error::InvalidConfig("plan: needs at least one algorithm and one function".into()));
        }
        if self.dims.is_empty() && self.functions.iter().any(|&f| benchmarks::fixed_dim(f).is_none()) {
            return Err(Error::InvalidConfig("plan: scalable functions need at least one dimension".into()));
        }
        for &id in &self.functions {
            for dim in self.dims_for(id) {
                benchmarks::resolve(id, dim)?;
            }
        }
        Ok(())
    }

    fn dims_for(&self, function_id: u32) -> Vec<usize> {
        match benchmarks::fixed_dim(function_id) {
            Some(d) => vec![d],
            None => self.dims.clone(),
        }
    }

    pub fn max_eval_for(&self, dim: usize) -> u64 {
        self.max_eval.unwrap_or(self.evals_per_dim * dim as u64)
    }

    /// Cells ordered by function, then dimension, then algorithm.
    pub fn cells(&self) -> Vec<CellKey> {
        let mut out = Vec::new();
        for &function_id in &self.functions {
            for dim in self.dims_for(function_id) {
                for &algorithm in &self.algorithms {
                    out.push(CellKey { algorithm, function_id, dim });
                }
            }
        }
        out
    }

    pub fn request(&self, cell: &CellKey, run: usize) -> SolveRequest {
        SolveRequest {
            algorithm: cell.algorithm,
            function_id: cell.function_id,
            dim: cell.dim,
            np: self.np,
            max_eval: self.max_eval_for(cell.dim),
            seed: self.base_seed.wrapping_add(run as u64),
            runners: self.runners,
            modification_rate: self.modification_rate,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunFailure {
    pub run_index: usize,
    pub seed: u64,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellReport {
    pub algorithm: Algorithm,
    pub function_id: u32,
    pub function_name: String,
    pub dim: usize,
    pub runs: usize,
    pub seed_base: u64,
    pub max_eval: u64,
    /// Over successful runs; absent when every run failed.
    pub stats: Option<CellStats>,
    pub failures: Vec<RunFailure>,
    pub reports: Vec<RunReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportMetadata {
    pub rng: String,
    pub sd_convention: String,
    pub budget_rule: String,
    pub seed_rule: String,
}

impl ReportMetadata {
    fn for_plan(plan: &ExperimentPlan) -> Self {
        Self {
            rng: RNG_ALGORITHM.into(),
            sd_convention: "sample (n - 1)".into(),
            budget_rule: match plan.max_eval {
                Some(e) => format!("max_eval = {e}"),
                None => format!("max_eval = {} * dim", plan.evals_per_dim),
            },
            seed_rule: "seed = base_seed + run_index".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub plan: ExperimentPlan,
    pub metadata: ReportMetadata,
    pub cells: Vec<CellReport>,
}

/// Runs every cell of `plan` on the current rayon pool.
pub fn run_experiment(plan: &ExperimentPlan) -> Result<ExperimentReport> {
    plan.validate()?;
    let cells = plan.cells();
    let jobs: Vec<(usize, usize)> = (0..cells.len()).flat_map(|c| (0..plan.runs).map(move |r| (c, r))).collect();
    let outcomes: Vec<Result<RunReport>> =
        jobs.par_iter().map(|&(c, r)| solve(&plan.request(&cells[c], r), None)).collect();

    let mut outcomes = outcomes.into_iter();
    let mut reports = Vec::with_capacity(cells.len());
    for cell in &cells {
        let spec = benchmarks::resolve(cell.function_id, cell.dim)?;
        let mut ok = Vec::new();
        let mut failures = Vec::new();
        for run_index in 0..plan.runs {
            match outcomes.next().expect("one outcome per job") {
                Ok(r) => ok.push(r),
                Err(e) => failures.push(RunFailure {
                    run_index,
                    seed: plan.base_seed.wrapping_add(run_index as u64),
                    message: e.to_string(),
                }),
            }
        }
        let bests: Vec<f64> = ok.iter().map(RunReport::best_objective).collect();
        reports.push(CellReport {
            algorithm: cell.algorithm,
            function_id: cell.function_id,
            function_name: spec.name.to_string(),
            dim: cell.dim,
            runs: plan.runs,
            seed_base: plan.base_seed,
            max_eval: plan.max_eval_for(cell.dim),
            stats: summarize(&bests).ok(),
            failures,
            reports: ok,
        });
    }
    Ok(ExperimentReport { plan: plan.clone(), metadata: ReportMetadata::for_plan(plan), cells: reports })
}

/// Like [`run_experiment`] on a dedicated pool of `threads` workers.
pub fn run_experiment_with_threads(plan: &ExperimentPlan, threads: usize) -> Result<ExperimentReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
    pool.install(|| run_experiment(plan))
}
