//! The original plant propagation algorithm.
//!
//! Each generation normalizes the objectives of the current population into
//! `(0, 1)`, lets every plant send a fitness-dependent number of runners whose
//! length shrinks as fitness grows, and truncates parents plus offspring back
//! to `np` members.

use serde::{Deserialize, Serialize};

use crate::budget::EvalBudget;
use crate::error::{Error, Result};
use crate::objective::{Evaluator, Objective};
use crate::population::Population;
use crate::report::{Algorithm, RunReport, SolverParams};
use crate::rng::RngStream;
use crate::space::SearchSpace;

/// Margin keeping normalized fitness strictly inside `(0, 1)`.
pub const NORMALIZATION_EPS: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PpaConfig {
    pub np: usize,
    pub n_max: usize,
    pub g_max: u64,
    pub max_eval: u64,
    pub seed: u64,
}

impl PpaConfig {
    pub fn validate(&self) -> Result<()> {
        if self.np < 2 {
            return Err(Error::InvalidConfig("ppa: np must be at least 2".into()));
        }
        if self.n_max < 1 {
            return Err(Error::InvalidConfig("ppa: n_max must be at least 1".into()));
        }
        if self.g_max < 1 {
            return Err(Error::InvalidConfig("ppa: g_max must be at least 1".into()));
        }
        if self.max_eval < self.np as u64 {
            return Err(Error::InvalidConfig(format!(
                "ppa: max_eval {} cannot cover the initial population of {}",
                self.max_eval, self.np
            )));
        }
        Ok(())
    }
}

/// Normalized fitness values aligned with the objective vector they came from.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedFitness(pub Vec<f64>);

/// Min-max maps objectives to `(0, 1)`, lowest objective to the largest value.
///
/// `N_i = eps + (1 - 2 eps) (f_max - f_i) / (f_max - f_min)`; a constant
/// vector maps to 0.5 everywhere.
pub fn normalize_objectives(objectives: &[f64]) -> NormalizedFitness {
    let (lo, hi) = objectives.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &f| (lo.min(f), hi.max(f)));
    let span = hi - lo;
    if !(span.is_finite() && span > 0.0) {
        return NormalizedFitness(vec![0.5; objectives.len()]);
    }
    let scale = 1.0 - 2.0 * NORMALIZATION_EPS;
    NormalizedFitness(objectives.iter().map(|f| NORMALIZATION_EPS + scale * (hi - f) / span).collect())
}

/// `ceil(n_max * fitness * alpha)` kept in `[1, n_max]`.
pub fn runner_count_with(fitness: f64, n_max: usize, alpha: f64) -> usize {
    let n = (n_max as f64 * fitness * alpha).ceil() as usize;
    n.clamp(1, n_max)
}

pub fn runner_count(fitness: f64, n_max: usize, rng: &mut RngStream) -> usize {
    runner_count_with(fitness, n_max, rng.open_unit())
}

/// `dx_j = 2 (1 - fitness) (r_j - 0.5)`.
pub fn runner_offset_with(fitness: f64, r: &[f64]) -> Vec<f64> {
    r.iter().map(|r| 2.0 * (1.0 - fitness) * (r - 0.5)).collect()
}

pub fn runner_offset(fitness: f64, dim: usize, rng: &mut RngStream) -> Vec<f64> {
    let r: Vec<f64> = (0..dim).map(|_| rng.closed_unit()).collect();
    runner_offset_with(fitness, &r)
}

/// `y_j = x_j + (b_j - a_j) dx_j`, clamped to the box.
pub fn apply_runner(x: &[f64], dx: &[f64], space: &SearchSpace) -> Vec<f64> {
    let y = x.iter().zip(dx).zip(space.widths()).map(|((x, d), w)| x + w * d).collect();
    space.clamped(y)
}

/// Runs the algorithm until `g_max` generations or `max_eval` evaluations.
pub fn run_ppa<O: Objective + ?Sized>(config: &PpaConfig, space: &SearchSpace, objective: &O) -> Result<RunReport> {
    config.validate()?;
    let mut rng = RngStream::new(config.seed);
    let mut eval = Evaluator::new(objective, EvalBudget::new(config.max_eval, config.g_max));
    let dim = space.dim();

    let mut pop = Population::default();
    for _ in 0..config.np {
        let x = space.uniform_init(&mut rng);
        let c = eval.evaluate(x, &mut rng)?.expect("budget covers the initial population");
        pop.push(c);
    }
    pop.sort_ascending();
    let mut trajectory = vec![pop[0].objective];

    while eval.budget().may_continue() {
        let fitness = normalize_objectives(&pop.objectives()).0;
        let parents = pop.members().to_vec();
        'plants: for (parent, &n) in parents.iter().zip(&fitness) {
            let runners = runner_count(n, config.n_max, &mut rng);
            for _ in 0..runners {
                let dx = runner_offset(n, dim, &mut rng);
                let y = apply_runner(&parent.position, &dx, space);
                match eval.evaluate(y, &mut rng)? {
                    Some(child) => pop.push(child),
                    None => break 'plants,
                }
            }
        }
        pop.select_survivors(config.np)?;
        eval.budget_mut().complete_generation();
        trajectory.push(pop[0].objective);
    }

    let budget = eval.budget();
    Ok(RunReport::new(
        Algorithm::Ppa,
        pop[0].clone(),
        budget.n_eval(),
        budget.n_gen(),
        trajectory,
        config.seed,
        SolverParams::Ppa(config.clone()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = NORMALIZATION_EPS;

    #[test]
    fn normalization_examples() {
        let n = normalize_objectives(&[0.0, 10.0]).0;
        assert!((n[0] - (1.0 - EPS)).abs() < 1e-15 && (n[1] - EPS).abs() < 1e-15);
        assert_eq!(normalize_objectives(&[4.0, 4.0, 4.0]).0, vec![0.5; 3]);
        // independent affine oracle: eps + (1 - 2 eps) * t, t = (10 - f) / 10
        let n = normalize_objectives(&[0.0, 5.0, 10.0]).0;
        let oracle = [1.0, 0.5, 0.0].map(|t| EPS + (1.0 - 2.0 * EPS) * t);
        for (a, b) in n.iter().zip(oracle) {
            assert!((a - b).abs() < 1e-15);
        }
        assert_eq!(n[1], 0.5);
    }

    #[test]
    fn runner_count_examples() {
        assert_eq!(runner_count_with(0.999_999, 5, 1.0 - 1e-12), 5);
        assert_eq!(runner_count_with(0.3, 5, 1e-300), 1);
        assert_eq!(runner_count_with(0.5, 5, 0.5), 2);
    }

    #[test]
    fn runner_offset_examples() {
        let dx = runner_offset_with(1.0, &[0.0, 0.3, 1.0]);
        assert!(dx.iter().all(|d| *d == 0.0));
        assert_eq!(runner_offset_with(0.5, &[1.0]), vec![0.5]);
        assert_eq!(runner_offset_with(0.5, &[0.0]), vec![-0.5]);
    }

    #[test]
    fn apply_runner_examples() {
        let s = SearchSpace::uniform(-100.0, 100.0, 1).unwrap();
        assert_eq!(apply_runner(&[12.5], &[0.0], &s), vec![12.5]);
        assert_eq!(apply_runner(&[0.0], &[0.5], &s), vec![100.0]);
        assert_eq!(apply_runner(&[90.0], &[0.5], &s), vec![100.0]);
    }

    #[test]
    fn single_generation_bound() {
        let cfg = PpaConfig { np: 10, n_max: 3, g_max: 1, max_eval: 1_000_000, seed: 4 };
        let s = SearchSpace::uniform(-5.0, 5.0, 3).unwrap();
        let r = run_ppa(&cfg, &s, &|x: &[f64]| x.iter().map(|v| v * v).sum::<f64>()).unwrap();
        assert_eq!(r.generations, 1);
        assert!(r.n_eval > 10 && r.n_eval <= 10 + 10 * 3);
        assert_eq!(r.trajectory.len(), 2);
    }

    #[test]
    fn rejects_bad_configs() {
        let s = SearchSpace::uniform(-1.0, 1.0, 2).unwrap();
        let f = |x: &[f64]| x[0];
        let base = PpaConfig { np: 10, n_max: 3, g_max: 5, max_eval: 100, seed: 0 };
        for bad in [
            PpaConfig { np: 1, ..base.clone() },
            PpaConfig { n_max: 0, ..base.clone() },
            PpaConfig { g_max: 0, ..base.clone() },
            PpaConfig { max_eval: 9, ..base.clone() },
        ] {
            assert!(matches!(run_ppa(&bad, &s, &f), Err(Error::InvalidConfig(_))));
        }
    }

    #[test]
    fn truncated_generation_still_selects() {
        let cfg = PpaConfig { np: 10, n_max: 5, g_max: 1000, max_eval: 37, seed: 9 };
        let s = SearchSpace::uniform(-5.0, 5.0, 2).unwrap();
        let r = run_ppa(&cfg, &s, &|x: &[f64]| x[0].abs() + x[1].abs()).unwrap();
        assert_eq!(r.n_eval, 37);
        assert!(r.trajectory.windows(2).all(|w| w[1] <= w[0]));
    }
}
