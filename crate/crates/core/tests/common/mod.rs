//! Independent oracles and instrumentation shared by the integration tests.
#![allow(dead_code)]

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use runnerbench::{Objective, RngStream, SearchSpace};

/// Textbook statistics, written without reference to the library code.
pub struct NaiveStats {
    pub min: f64,
    pub max: f64,
    pub median: f64,
    pub mean: f64,
    pub sd: f64,
}

pub fn naive_stats(v: &[f64]) -> NaiveStats {
    let n = v.len();
    let mut min = v[0];
    let mut max = v[0];
    let mut total = 0.0;
    for &x in v {
        if x < min {
            min = x;
        }
        if x > max {
            max = x;
        }
        total += x;
    }
    let mean = total / n as f64;
    // insertion sort for the median
    let mut s: Vec<f64> = Vec::new();
    for &x in v {
        let pos = s.iter().position(|&y| y > x).unwrap_or(s.len());
        s.insert(pos, x);
    }
    let median = if n % 2 == 1 { s[n / 2] } else { 0.5 * (s[n / 2 - 1] + s[n / 2]) };
    let mut acc = 0.0;
    for &x in v {
        acc += (x - mean).powi(2);
    }
    let sd = if n > 1 { (acc / (n as f64 - 1.0)).sqrt() } else { 0.0 };
    NaiveStats { min, max, median, mean, sd }
}

/// Minimizer of `418.98288727243369 - x sin(sqrt|x|)` on `[-500, 500]`:
/// a 0.01-step grid scan followed by golden-section refinement.
pub fn schwefel_1d_argmin() -> f64 {
    let g = |x: f64| 418.982_887_272_433_7 - x * x.abs().sqrt().sin();
    let mut best = -500.0;
    let mut k = 0;
    while k <= 100_000 {
        let x = -500.0 + k as f64 * 0.01;
        if g(x) < g(best) {
            best = x;
        }
        k += 1;
    }
    let (mut a, mut b) = ((best - 0.01f64).max(-500.0), (best + 0.01f64).min(500.0));
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..200 {
        let c = b - phi * (b - a);
        let d = a + phi * (b - a);
        if g(c) < g(d) {
            b = d;
        } else {
            a = c;
        }
    }
    0.5 * (a + b)
}

/// Wraps an objective, counting calls and flagging any infeasible query.
pub struct Instrumented<'a, O: Objective + ?Sized> {
    pub inner: &'a O,
    pub space: SearchSpace,
    pub calls: AtomicU64,
    pub infeasible: AtomicBool,
}

impl<'a, O: Objective + ?Sized> Instrumented<'a, O> {
    pub fn new(inner: &'a O, space: SearchSpace) -> Self {
        Self { inner, space, calls: AtomicU64::new(0), infeasible: AtomicBool::new(false) }
    }

    pub fn calls(&self) -> u64 {
        self.calls.load(Ordering::SeqCst)
    }

    pub fn saw_infeasible(&self) -> bool {
        self.infeasible.load(Ordering::SeqCst)
    }
}

impl<O: Objective + ?Sized> Objective for Instrumented<'_, O> {
    fn evaluate(&self, x: &[f64], rng: &mut RngStream) -> f64 {
        self.calls.fetch_add(1, Ordering::SeqCst);
        if !self.space.contains(x) {
            self.infeasible.store(true, Ordering::SeqCst);
        }
        self.inner.evaluate(x, rng)
    }
}

pub fn non_increasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] <= w[0])
}

/// Pearson chi-square statistic of observed counts against expected probabilities.
pub fn chi_square(observed: &[u64], probs: &[f64]) -> f64 {
    let n: u64 = observed.iter().sum();
    observed
        .iter()
        .zip(probs)
        .map(|(&o, &p)| {
            let e = p * n as f64;
            (o as f64 - e).powi(2) / e
        })
        .sum()
}
