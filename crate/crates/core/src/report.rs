use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abc::AbcConfig;
use crate::error::Error;
use crate::mppa::MppaConfig;
use crate::population::Candidate;
use crate::ppa::PpaConfig;
use crate::rng::RNG_ALGORITHM;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Ppa,
    Mppa,
    Abc,
    Mabc,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Algorithm::Ppa, Algorithm::Mppa, Algorithm::Abc, Algorithm::Mabc];

    pub fn as_str(&self) -> &'static str {
        match self {
            Algorithm::Ppa => "ppa",
            Algorithm::Mppa => "mppa",
            Algorithm::Abc => "abc",
            Algorithm::Mabc => "mabc",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ppa" => Ok(Algorithm::Ppa),
            "mppa" => Ok(Algorithm::Mppa),
            "abc" => Ok(Algorithm::Abc),
            "mabc" => Ok(Algorithm::Mabc),
            other => {
                Err(Error::InvalidConfig(format!("unknown algorithm `{other}` (expected ppa, mppa, abc or mabc)")))
            }
        }
    }
}

/// Fully resolved solver parameters, recorded with every run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "solver", rename_all = "lowercase")]
pub enum SolverParams {
    Ppa(PpaConfig),
    Mppa(MppaConfig),
    Abc(AbcConfig),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub algorithm: Algorithm,
    pub best: Candidate,
    pub n_eval: u64,
    pub generations: u64,
    /// Best objective after initialization, then after every completed generation.
    pub trajectory: Vec<f64>,
    pub seed: u64,
    pub rng: String,
    pub params: SolverParams,
}

impl RunReport {
    pub(crate) fn new(
        algorithm: Algorithm,
        best: Candidate,
        n_eval: u64,
        generations: u64,
        trajectory: Vec<f64>,
        seed: u64,
        params: SolverParams,
    ) -> Self {
        Self { algorithm, best, n_eval, generations, trajectory, seed, rng: RNG_ALGORITHM.to_string(), params }
    }

    pub fn best_objective(&self) -> f64 {
        self.best.objective
    }

    /// Bitwise equality, including every float in the report.
    pub fn bit_identical(&self, other: &RunReport) -> bool {
        let bits = |v: &[f64]| v.iter().map(|x| x.to_bits()).collect::<Vec<_>>();
        self.algorithm == other.algorithm
            && self.best.objective.to_bits() == other.best.objective.to_bits()
            && bits(&self.best.position) == bits(&other.best.position)
            && self.n_eval == other.n_eval
            && self.generations == other.generations
            && bits(&self.trajectory) == bits(&other.trajectory)
            && self.seed == other.seed
            && self.params == other.params
    }
}
