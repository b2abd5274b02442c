//! Box-bounded search spaces.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::RngStream;

/// Per-coordinate bounds `[lower[j], upper[j]]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidSpace("dimension must be at least 1".into()));
        }
        if lower.len() != upper.len() {
            return Err(Error::InvalidSpace(format!("{} lower bounds but {} upper bounds", lower.len(), upper.len())));
        }
        for (j, (a, b)) in lower.iter().zip(&upper).enumerate() {
            if !(a.is_finite() && b.is_finite() && a < b) {
                return Err(Error::InvalidSpace(format!("coordinate {j}: [{a}, {b}] is not a proper interval")));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same interval `[lower, upper]` on every one of `dim` coordinates.
    pub fn uniform(lower: f64, upper: f64, dim: usize) -> Result<Self> {
        Self::new(vec![lower; dim], vec![upper; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim() && x.iter().zip(self.lower.iter().zip(&self.upper)).all(|(v, (a, b))| a <= v && v <= b)
    }

    /// Maps every coordinate onto `[a_j, b_j]` by clamping to the nearest bound.
    pub fn clamp(&self, y: &mut [f64]) {
        debug_assert_eq!(y.len(), self.dim());
        for (v, (a, b)) in y.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *v = v.max(*a).min(*b);
        }
    }

    pub fn clamped(&self, mut y: Vec<f64>) -> Vec<f64> {
        self.clamp(&mut y);
        y
    }

    /// `x_j = a_j + (b_j - a_j) * alpha_j` for the supplied fractions.
    pub fn point_at(&self, alphas: &[f64]) -> Vec<f64> {
        let x = self.lower.iter().zip(&self.upper).zip(alphas).map(|((a, b), t)| a + (b - a) * t).collect();
        // a + (b - a) * t can round past b when t is just below 1
        self.clamped(x)
    }

    /// A uniformly random point, one fresh `[0, 1)` draw per coordinate.
    pub fn uniform_init(&self, rng: &mut RngStream) -> Vec<f64> {
        let alphas: Vec<f64> = (0..self.dim()).map(|_| rng.uniform()).collect();
        self.point_at(&alphas)
    }

    pub fn widths(&self) -> impl Iterator<Item = f64> + '_ {
        self.lower.iter().zip(&self.upper).map(|(a, b)| b - a)
    }
}
