//! Modified plant propagation.
//!
//! Every plant sends a fixed number of runners. Each runner first tries a
//! multiplicative step around the parent (`y = x + beta x`); if that does not
//! improve on the parent a long runner scaled by the upper bounds is tried,
//! and if that also fails one scaled by the lower bounds. Every evaluated
//! point joins the selection pool, parents included, and the best `np`
//! survive.

mod trace;

pub use trace::{
    phase_mean, read_trace_csv, trace_histogram, write_trace_csv, EquationHistogram, HistogramBin, PerturbationTrace,
    Runner, TraceHistogram, TraceRecord,
};

use serde::{Deserialize, Serialize};

use crate::budget::EvalBudget;
use crate::error::{Error, Result};
use crate::objective::{Evaluator, Objective};
use crate::population::{Candidate, Population};
use crate::report::{Algorithm, RunReport, SolverParams};
use crate::rng::RngStream;
use crate::space::SearchSpace;

pub const DEFAULT_RUNNERS: usize = 5;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MppaConfig {
    pub np: usize,
    pub n_r: usize,
    pub max_gen: u64,
    pub max_eval: u64,
    pub seed: u64,
}

impl MppaConfig {
    pub fn validate(&self) -> Result<()> {
        if self.np < 2 {
            return Err(Error::InvalidConfig("mppa: np must be at least 2".into()));
        }
        if self.n_r < 1 {
            return Err(Error::InvalidConfig("mppa: n_r must be at least 1".into()));
        }
        if self.max_eval < self.np as u64 {
            return Err(Error::InvalidConfig(format!(
                "mppa: max_eval {} cannot cover the initial population of {}",
                self.max_eval, self.np
            )));
        }
        Ok(())
    }
}

fn draw_betas(dim: usize, rng: &mut RngStream) -> Vec<f64> {
    (0..dim).map(|_| rng.symmetric()).collect()
}

/// `y_j = x_j + beta_j x_j`, clamped.
pub fn perturb_self_with(x: &[f64], betas: &[f64], space: &SearchSpace) -> Vec<f64> {
    space.clamped(x.iter().zip(betas).map(|(x, b)| x + b * x).collect())
}

/// `y_j = x_j + beta_j b_j`, clamped.
pub fn perturb_upper_with(x: &[f64], betas: &[f64], space: &SearchSpace) -> Vec<f64> {
    space.clamped(x.iter().zip(betas).zip(space.upper()).map(|((x, b), u)| x + b * u).collect())
}

/// `y_j = x_j + beta_j a_j`, clamped.
pub fn perturb_lower_with(x: &[f64], betas: &[f64], space: &SearchSpace) -> Vec<f64> {
    space.clamped(x.iter().zip(betas).zip(space.lower()).map(|((x, b), l)| x + b * l).collect())
}

pub fn perturb_self(x: &[f64], space: &SearchSpace, rng: &mut RngStream) -> Vec<f64> {
    perturb_self_with(x, &draw_betas(x.len(), rng), space)
}

pub fn perturb_upper(x: &[f64], space: &SearchSpace, rng: &mut RngStream) -> Vec<f64> {
    perturb_upper_with(x, &draw_betas(x.len(), rng), space)
}

pub fn perturb_lower(x: &[f64], space: &SearchSpace, rng: &mut RngStream) -> Vec<f64> {
    perturb_lower_with(x, &draw_betas(x.len(), rng), space)
}

impl Runner {
    fn perturb(self, x: &[f64], space: &SearchSpace, rng: &mut RngStream) -> Vec<f64> {
        match self {
            Runner::SelfScaled => perturb_self(x, space, rng),
            Runner::UpperScaled => perturb_upper(x, space, rng),
            Runner::LowerScaled => perturb_lower(x, space, rng),
        }
    }
}

/// Mutable state threaded through one run.
pub struct Propagation<'a, 'o, O: Objective + ?Sized> {
    pub space: &'a SearchSpace,
    pub evaluator: &'a mut Evaluator<'o, O>,
    pub rng: &'a mut RngStream,
    pub trace: Option<&'a mut PerturbationTrace>,
    pub generation: u64,
}

/// Offspring of one parent in one generation, plus whether the budget ran out.
#[derive(Debug, Default)]
pub struct Offspring {
    pub candidates: Vec<Candidate>,
    pub exhausted: bool,
}

/// Sends `n_r` runners from `parent` using the cascade of perturbations.
///
/// Each step is evaluated and kept whether or not it improves. A step is
/// followed by the next perturbation only while `f(y) - f(parent) >= 0`.
pub fn propagate_individual<O: Objective + ?Sized>(
    parent: &Candidate,
    n_r: usize,
    ctx: &mut Propagation<'_, '_, O>,
) -> Result<Offspring> {
    let mut out = Offspring::default();
    for _ in 0..n_r {
        for runner in Runner::CASCADE {
            let y = runner.perturb(&parent.position, ctx.space, ctx.rng);
            let Some(child) = ctx.evaluator.evaluate(y, ctx.rng)? else {
                out.exhausted = true;
                return Ok(out);
            };
            if let Some(trace) = ctx.trace.as_deref_mut() {
                trace.record_step(ctx.generation, runner, &parent.position, &child.position);
            }
            let improved = child.objective - parent.objective < 0.0;
            out.candidates.push(child);
            if improved {
                break;
            }
        }
    }
    Ok(out)
}

/// Runs until `max_gen` generations or `max_eval` evaluations, whichever binds first.
pub fn run_mppa<O: Objective + ?Sized>(
    config: &MppaConfig,
    space: &SearchSpace,
    objective: &O,
    trace: Option<&mut PerturbationTrace>,
) -> Result<RunReport> {
    config.validate()?;
    let mut rng = RngStream::new(config.seed);
    let mut evaluator = Evaluator::new(objective, EvalBudget::new(config.max_eval, config.max_gen));

    let mut pop = Population::default();
    for _ in 0..config.np {
        let x = space.uniform_init(&mut rng);
        pop.push(evaluator.evaluate(x, &mut rng)?.expect("budget covers the initial population"));
    }
    pop.sort_ascending();
    let mut trajectory = vec![pop[0].objective];

    let mut ctx = Propagation { space, evaluator: &mut evaluator, rng: &mut rng, trace, generation: 0 };
    while ctx.evaluator.budget().may_continue() {
        ctx.generation += 1;
        let parents = pop.members().to_vec();
        for parent in &parents {
            let off = propagate_individual(parent, config.n_r, &mut ctx)?;
            pop.extend(off.candidates);
            if off.exhausted {
                break;
            }
        }
        pop.select_survivors(config.np)?;
        ctx.evaluator.budget_mut().complete_generation();
        trajectory.push(pop[0].objective);
    }

    let budget = evaluator.budget();
    Ok(RunReport::new(
        Algorithm::Mppa,
        pop[0].clone(),
        budget.n_eval(),
        budget.n_gen(),
        trajectory,
        config.seed,
        SolverParams::Mppa(config.clone()),
    ))
}
