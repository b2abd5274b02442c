use serde::{Deserialize, Serialize};

/// Evaluation and generation limits for one run.
///
/// `n_eval` can never pass `max_eval`: callers ask for a unit of budget with
/// [`EvalBudget::try_consume`] before every objective call.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalBudget {
    max_eval: u64,
    max_gen: u64,
    n_eval: u64,
    n_gen: u64,
}

impl EvalBudget {
    pub fn new(max_eval: u64, max_gen: u64) -> Self {
        Self { max_eval, max_gen, n_eval: 0, n_gen: 0 }
    }

    pub fn try_consume(&mut self) -> bool {
        if self.n_eval < self.max_eval {
            self.n_eval += 1;
            true
        } else {
            false
        }
    }

    pub fn evals_exhausted(&self) -> bool {
        self.n_eval >= self.max_eval
    }

    /// True while another generation may start.
    pub fn may_continue(&self) -> bool {
        self.n_gen < self.max_gen && !self.evals_exhausted()
    }

    pub fn complete_generation(&mut self) {
        self.n_gen += 1;
    }

    pub fn n_eval(&self) -> u64 {
        self.n_eval
    }

    pub fn n_gen(&self) -> u64 {
        self.n_gen
    }

    pub fn max_eval(&self) -> u64 {
        self.max_eval
    }

    pub fn max_gen(&self) -> u64 {
        self.max_gen
    }

    pub fn remaining(&self) -> u64 {
        self.max_eval - self.n_eval
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn consume_until_exhausted() {
        let mut b = EvalBudget::new(1, 10);
        assert!(b.try_consume());
        assert_eq!(b.n_eval(), 1);
        assert!(!b.try_consume());
        assert_eq!(b.n_eval(), 1);
    }

    #[test]
    fn exact_count_over_long_loop() {
        let mut b = EvalBudget::new(150_000, 1);
        let mut granted = 0u64;
        for _ in 0..200_000 {
            if b.try_consume() {
                granted += 1;
            }
        }
        assert_eq!(granted, 150_000);
        assert_eq!(b.n_eval(), 150_000);
        assert_eq!(b.remaining(), 0);
    }

    #[test]
    fn generation_guard() {
        let mut b = EvalBudget::new(100, 2);
        assert!(b.may_continue());
        b.complete_generation();
        b.complete_generation();
        assert!(!b.may_continue());
    }
}
