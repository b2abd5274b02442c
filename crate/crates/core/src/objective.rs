//! Objective functions and budgeted evaluation.

use crate::budget::EvalBudget;
use crate::error::{Error, Result};
use crate::population::Candidate;
use crate::rng::RngStream;

/// A scalar function to minimize.
///
/// The random stream is passed so noisy objectives draw from the run's own
/// seeded stream; deterministic objectives ignore it.
pub trait Objective: Sync {
    fn evaluate(&self, x: &[f64], rng: &mut RngStream) -> f64;
}

impl<F> Objective for F
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    fn evaluate(&self, x: &[f64], _rng: &mut RngStream) -> f64 {
        self(x)
    }
}

/// Pairs an objective with the run's budget; every evaluation goes through here.
pub struct Evaluator<'a, O: Objective + ?Sized> {
    objective: &'a O,
    budget: EvalBudget,
}

impl<'a, O: Objective + ?Sized> Evaluator<'a, O> {
    pub fn new(objective: &'a O, budget: EvalBudget) -> Self {
        Self { objective, budget }
    }

    /// Evaluates `position` if budget remains. `Ok(None)` means the budget is spent.
    pub fn evaluate(&mut self, position: Vec<f64>, rng: &mut RngStream) -> Result<Option<Candidate>> {
        if !self.budget.try_consume() {
            return Ok(None);
        }
        let value = self.objective.evaluate(&position, rng);
        if !value.is_finite() {
            return Err(Error::NonFiniteObjective { value, position });
        }
        Ok(Some(Candidate::new(position, value)))
    }

    pub fn budget(&self) -> &EvalBudget {
        &self.budget
    }

    pub fn budget_mut(&mut self) -> &mut EvalBudget {
        &mut self.budget
    }
}
