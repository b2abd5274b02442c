//! Artificial bee colony baselines.
//!
//! The classic variant uses the canonical single-coordinate move
//! `v_j = x_j + phi (x_j - x_k,j)` with employed, onlooker and scout phases.
//! The modified variant replaces the move with a best/1 differential step
//! applied coordinate-wise with probability `modification_rate` and runs no
//! scout phase.

use serde::{Deserialize, Serialize};

use crate::budget::EvalBudget;
use crate::error::{Error, Result};
use crate::objective::{Evaluator, Objective};
use crate::population::Candidate;
use crate::report::{Algorithm, RunReport, SolverParams};
use crate::rng::RngStream;
use crate::space::SearchSpace;

pub const DEFAULT_MODIFICATION_RATE: f64 = 0.4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AbcVariant {
    Classic,
    Modified,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AbcConfig {
    /// Number of food sources.
    pub sn: usize,
    /// Abandonment threshold; `u64::MAX` disables the scout phase.
    pub limit: u64,
    pub max_eval: u64,
    pub seed: u64,
    pub variant: AbcVariant,
    pub modification_rate: f64,
}

impl AbcConfig {
    /// Colony for a population of `np` bees on a `dim`-dimensional problem:
    /// `sn = ceil(np / 2)`, `limit = sn * dim`.
    pub fn for_population(np: usize, dim: usize, max_eval: u64, seed: u64, variant: AbcVariant) -> Self {
        let sn = np.div_ceil(2);
        Self { sn, limit: (sn * dim) as u64, max_eval, seed, variant, modification_rate: DEFAULT_MODIFICATION_RATE }
    }

    pub fn validate(&self) -> Result<()> {
        if self.sn < 2 {
            return Err(Error::InvalidConfig("abc: colony needs at least 2 food sources".into()));
        }
        if self.limit < 1 {
            return Err(Error::InvalidConfig("abc: limit must be at least 1".into()));
        }
        if !(self.modification_rate > 0.0 && self.modification_rate <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "abc: modification rate must lie in (0, 1], got {}",
                self.modification_rate
            )));
        }
        if self.max_eval < self.sn as u64 {
            return Err(Error::InvalidConfig(format!(
                "abc: max_eval {} cannot cover {} food sources",
                self.max_eval, self.sn
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FoodSource {
    pub position: Vec<f64>,
    pub objective: f64,
    pub trials: u64,
}

impl From<Candidate> for FoodSource {
    fn from(c: Candidate) -> Self {
        Self { position: c.position, objective: c.objective, trials: 0 }
    }
}

impl FoodSource {
    /// Greedy replacement. Returns true when `candidate` strictly improves.
    pub fn offer(&mut self, candidate: Candidate) -> bool {
        if candidate.objective < self.objective {
            self.position = candidate.position;
            self.objective = candidate.objective;
            self.trials = 0;
            true
        } else {
            self.trials += 1;
            false
        }
    }
}

/// `1 / (1 + f)` for `f >= 0`, `1 + |f|` otherwise.
pub fn fitness(objective: f64) -> f64 {
    if objective >= 0.0 {
        1.0 / (1.0 + objective)
    } else {
        1.0 + objective.abs()
    }
}

/// Index drawn with probability proportional to `weights[i]`, given `u` in `[0, 1)`.
pub fn roulette_with(weights: &[f64], u: f64) -> usize {
    let total: f64 = weights.iter().sum();
    let target = u * total;
    let mut acc = 0.0;
    for (i, w) in weights.iter().enumerate() {
        acc += w;
        if target < acc {
            return i;
        }
    }
    weights.len() - 1
}

pub fn neighbor_candidate_with(x: &[f64], partner: &[f64], j: usize, phi: f64, space: &SearchSpace) -> Vec<f64> {
    let mut v = x.to_vec();
    v[j] = x[j] + phi * (x[j] - partner[j]);
    space.clamped(v)
}

pub fn neighbor_candidate(x: &[f64], partner: &[f64], space: &SearchSpace, rng: &mut RngStream) -> Vec<f64> {
    let j = rng.index(x.len());
    let phi = rng.symmetric();
    neighbor_candidate_with(x, partner, j, phi, space)
}

/// Coordinates where `mask[j]` holds take `best_j + phi_j (r1_j - r2_j)`; others copy `x`.
pub fn mabc_candidate_with(
    x: &[f64],
    best: &[f64],
    r1: &[f64],
    r2: &[f64],
    mask: &[bool],
    phis: &[f64],
    space: &SearchSpace,
) -> Vec<f64> {
    let v = (0..x.len()).map(|j| if mask[j] { best[j] + phis[j] * (r1[j] - r2[j]) } else { x[j] }).collect();
    space.clamped(v)
}

pub fn mabc_candidate(
    x: &[f64],
    best: &[f64],
    r1: &[f64],
    r2: &[f64],
    modification_rate: f64,
    space: &SearchSpace,
    rng: &mut RngStream,
) -> Vec<f64> {
    let dim = x.len();
    let forced = rng.index(dim);
    let mask: Vec<bool> = (0..dim).map(|j| rng.chance(modification_rate) || j == forced).collect();
    let phis: Vec<f64> = (0..dim).map(|_| rng.symmetric()).collect();
    mabc_candidate_with(x, best, r1, r2, &mask, &phis, space)
}

/// Counters reported alongside a run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbcStats {
    pub scout_events: u64,
    pub improvements: u64,
    pub failures: u64,
}

struct Colony<'a, 'o, O: Objective + ?Sized> {
    config: &'a AbcConfig,
    space: &'a SearchSpace,
    evaluator: Evaluator<'o, O>,
    rng: RngStream,
    sources: Vec<FoodSource>,
    best: Candidate,
    stats: AbcStats,
}

impl<O: Objective + ?Sized> Colony<'_, '_, O> {
    fn propose(&mut self, i: usize) -> Vec<f64> {
        let n = self.sources.len();
        match self.config.variant {
            AbcVariant::Classic => {
                let k = self.rng.index_excluding(n, i);
                neighbor_candidate(&self.sources[i].position, &self.sources[k].position, self.space, &mut self.rng)
            }
            AbcVariant::Modified => {
                let (r1, r2) = if n >= 3 {
                    let r1 = self.rng.index_excluding(n, i);
                    let mut r2 = self.rng.index_excluding(n, i);
                    while r2 == r1 {
                        r2 = self.rng.index_excluding(n, i);
                    }
                    (r1, r2)
                } else {
                    (0, 1)
                };
                mabc_candidate(
                    &self.sources[i].position,
                    &self.best.position,
                    &self.sources[r1].position,
                    &self.sources[r2].position,
                    self.config.modification_rate,
                    self.space,
                    &mut self.rng,
                )
            }
        }
    }

    fn note_best(&mut self, c: &Candidate) {
        if c.objective < self.best.objective {
            self.best = c.clone();
        }
    }

    /// One move plus greedy replacement on source `i`. `Ok(false)` when the budget is spent.
    fn visit(&mut self, i: usize) -> Result<bool> {
        let v = self.propose(i);
        let Some(c) = self.evaluator.evaluate(v, &mut self.rng)? else { return Ok(false) };
        self.note_best(&c);
        if self.sources[i].offer(c) {
            self.stats.improvements += 1;
        } else {
            self.stats.failures += 1;
        }
        Ok(true)
    }

    fn cycle(&mut self) -> Result<bool> {
        for i in 0..self.sources.len() {
            if !self.visit(i)? {
                return Ok(false);
            }
        }
        for _ in 0..self.sources.len() {
            let weights: Vec<f64> = self.sources.iter().map(|s| fitness(s.objective)).collect();
            let i = roulette_with(&weights, self.rng.uniform());
            if !self.visit(i)? {
                return Ok(false);
            }
        }
        if self.config.variant == AbcVariant::Classic {
            for i in 0..self.sources.len() {
                if self.sources[i].trials > self.config.limit {
                    let x = self.space.uniform_init(&mut self.rng);
                    let Some(c) = self.evaluator.evaluate(x, &mut self.rng)? else { return Ok(false) };
                    self.note_best(&c);
                    self.sources[i] = c.into();
                    self.stats.scout_events += 1;
                }
            }
        }
        Ok(true)
    }
}

/// Runs until the evaluation budget is spent; reports the best source ever seen.
pub fn run_abc_detailed<O: Objective + ?Sized>(
    config: &AbcConfig,
    space: &SearchSpace,
    objective: &O,
) -> Result<(RunReport, AbcStats)> {
    config.validate()?;
    let mut rng = RngStream::new(config.seed);
    let mut evaluator = Evaluator::new(objective, EvalBudget::new(config.max_eval, u64::MAX));
    let mut sources = Vec::with_capacity(config.sn);
    for _ in 0..config.sn {
        let x = space.uniform_init(&mut rng);
        let c = evaluator.evaluate(x, &mut rng)?.expect("budget covers the initial colony");
        sources.push(FoodSource::from(c));
    }
    let first = sources.iter().min_by(|a, b| a.objective.total_cmp(&b.objective)).expect("sn >= 2");
    let best = Candidate::new(first.position.clone(), first.objective);

    let mut colony = Colony { config, space, evaluator, rng, sources, best, stats: AbcStats::default() };
    let mut trajectory = vec![colony.best.objective];
    let mut cycles = 0u64;
    while !colony.evaluator.budget().evals_exhausted() {
        let complete = colony.cycle()?;
        cycles += 1;
        trajectory.push(colony.best.objective);
        if !complete {
            break;
        }
    }

    let algorithm = match config.variant {
        AbcVariant::Classic => Algorithm::Abc,
        AbcVariant::Modified => Algorithm::Mabc,
    };
    let report = RunReport::new(
        algorithm,
        colony.best,
        colony.evaluator.budget().n_eval(),
        cycles,
        trajectory,
        config.seed,
        SolverParams::Abc(config.clone()),
    );
    Ok((report, colony.stats))
}

pub fn run_abc<O: Objective + ?Sized>(config: &AbcConfig, space: &SearchSpace, objective: &O) -> Result<RunReport> {
    run_abc_detailed(config, space, objective).map(|(r, _)| r)
}
