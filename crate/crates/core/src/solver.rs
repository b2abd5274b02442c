//! Uniform entry point over the four solvers.

use serde::{Deserialize, Serialize};

use crate::abc::{run_abc, AbcConfig, AbcVariant, DEFAULT_MODIFICATION_RATE};
use crate::benchmarks::{self, ObjectiveSpec};
use crate::error::{Error, Result};
use crate::mppa::{run_mppa, MppaConfig, PerturbationTrace, DEFAULT_RUNNERS};
use crate::ppa::{run_ppa, PpaConfig};
use crate::report::{Algorithm, RunReport, SolverParams};

/// Generation cap used when the evaluation budget is meant to be the binding stop.
pub const GENERATION_SENTINEL: u64 = (1 << 31) - 1;
pub const DEFAULT_POPULATION: usize = 75;
pub const DEFAULT_EVALS_PER_DIM: u64 = 5000;

/// Everything needed to run one solver on one registered function.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveRequest {
    pub algorithm: Algorithm,
    pub function_id: u32,
    pub dim: usize,
    pub np: usize,
    pub max_eval: u64,
    pub seed: u64,
    /// `n_max` for ppa, `n_r` for mppa.
    pub runners: usize,
    pub modification_rate: f64,
}

impl SolveRequest {
    /// Defaults: `np = 75`, `max_eval = 5000 * dim`, five runners, modification rate 0.4.
    pub fn new(algorithm: Algorithm, function_id: u32, dim: usize, seed: u64) -> Self {
        Self {
            algorithm,
            function_id,
            dim,
            np: DEFAULT_POPULATION,
            max_eval: DEFAULT_EVALS_PER_DIM * dim as u64,
            seed,
            runners: DEFAULT_RUNNERS,
            modification_rate: DEFAULT_MODIFICATION_RATE,
        }
    }

    pub fn params(&self) -> SolverParams {
        match self.algorithm {
            Algorithm::Ppa => SolverParams::Ppa(PpaConfig {
                np: self.np,
                n_max: self.runners,
                g_max: GENERATION_SENTINEL,
                max_eval: self.max_eval,
                seed: self.seed,
            }),
            Algorithm::Mppa => SolverParams::Mppa(MppaConfig {
                np: self.np,
                n_r: self.runners,
                max_gen: GENERATION_SENTINEL,
                max_eval: self.max_eval,
                seed: self.seed,
            }),
            Algorithm::Abc | Algorithm::Mabc => {
                let variant = if self.algorithm == Algorithm::Abc { AbcVariant::Classic } else { AbcVariant::Modified };
                let mut c = AbcConfig::for_population(self.np, self.dim, self.max_eval, self.seed, variant);
                c.modification_rate = self.modification_rate;
                SolverParams::Abc(c)
            }
        }
    }

    pub fn objective(&self) -> Result<ObjectiveSpec> {
        benchmarks::resolve(self.function_id, self.dim)
    }
}

/// Runs `params` on `spec`. A trace is only collected by mppa.
pub fn run_params(
    params: &SolverParams,
    spec: &ObjectiveSpec,
    trace: Option<&mut PerturbationTrace>,
) -> Result<RunReport> {
    let space = spec.space();
    match params {
        SolverParams::Ppa(c) => run_ppa(c, &space, spec),
        SolverParams::Mppa(c) => run_mppa(c, &space, spec, trace),
        SolverParams::Abc(c) => run_abc(c, &space, spec),
    }
}

pub fn solve(request: &SolveRequest, trace: Option<&mut PerturbationTrace>) -> Result<RunReport> {
    if trace.is_some() && request.algorithm != Algorithm::Mppa {
        return Err(Error::InvalidConfig("tracing is only available for mppa".into()));
    }
    let spec = request.objective()?;
    run_params(&request.params(), &spec, trace)
}
