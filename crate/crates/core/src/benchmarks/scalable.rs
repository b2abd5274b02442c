//! Formulas of the eighteen scalable test functions, indexed by id.

use std::f64::consts::{E, PI};

use crate::rng::RngStream;

/// Constant of the Schwefel function: `max_x x sin(sqrt|x|)` on `[-500, 500]`.
pub const SCHWEFEL_CONSTANT: f64 = 418.982_887_272_433_7;

const WEIERSTRASS_A: f64 = 0.5;
const WEIERSTRASS_B: f64 = 3.0;
const WEIERSTRASS_KMAX: i32 = 20;

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub fn elliptic(x: &[f64]) -> f64 {
    let n = x.len();
    if n == 1 {
        return x[0] * x[0];
    }
    let denom = (n - 1) as f64;
    x.iter().enumerate().map(|(i, v)| 1e6f64.powf(i as f64 / denom) * v * v).sum()
}

/// `sum |x_i|^(i+1)` with 1-based `i`.
pub fn powered_abs(x: &[f64]) -> f64 {
    x.iter().enumerate().map(|(i, v)| v.abs().powi(i as i32 + 2)).sum()
}

pub fn step(x: &[f64]) -> f64 {
    x.iter()
        .map(|v| {
            let s = (v + 0.5).floor();
            s * s
        })
        .sum()
}

pub fn quartic(x: &[f64]) -> f64 {
    x.iter().enumerate().map(|(i, v)| (i + 1) as f64 * v.powi(4)).sum()
}

pub fn noisy_quartic(x: &[f64], rng: &mut RngStream) -> f64 {
    quartic(x) + rng.uniform()
}

/// `sum i x_i^2` with 1-based `i`.
pub fn weighted_sphere(x: &[f64]) -> f64 {
    x.iter().enumerate().map(|(i, v)| (i + 1) as f64 * v * v).sum()
}

pub fn schwefel_2_22(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v.abs()).sum();
    let prod: f64 = x.iter().map(|v| v.abs()).product();
    sum + prod
}

pub fn schwefel_2_21(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |m, v| m.max(v.abs()))
}

pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| {
            let a = w[1] - w[0] * w[0];
            let b = w[0] - 1.0;
            100.0 * a * a + b * b
        })
        .sum()
}

fn rastrigin_term(v: f64) -> f64 {
    v * v - 10.0 * (2.0 * PI * v).cos() + 10.0
}

pub fn rastrigin(x: &[f64]) -> f64 {
    x.iter().map(|&v| rastrigin_term(v)).sum()
}

/// Rounds to the nearest half; ties go away from zero.
fn half_grid(v: f64) -> f64 {
    if v.abs() < 0.5 {
        v
    } else {
        (2.0 * v).round() / 2.0
    }
}

pub fn noncontinuous_rastrigin(x: &[f64]) -> f64 {
    x.iter().map(|&v| rastrigin_term(half_grid(v))).sum()
}

pub fn griewank(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod: f64 = x.iter().enumerate().map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos()).product();
    sum - prod + 1.0
}

pub fn schwefel(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    SCHWEFEL_CONSTANT * n - x.iter().map(|v| v * v.abs().sqrt().sin()).sum::<f64>()
}

pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
}

pub fn alpine(x: &[f64]) -> f64 {
    x.iter().map(|v| (v * v.sin() + 0.1 * v).abs()).sum()
}

fn weierstrass_inner(v: f64) -> f64 {
    (0..=WEIERSTRASS_KMAX).map(|k| WEIERSTRASS_A.powi(k) * (2.0 * PI * WEIERSTRASS_B.powi(k) * (v + 0.5)).cos()).sum()
}

pub fn weierstrass(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    x.iter().map(|&v| weierstrass_inner(v)).sum::<f64>() - n * weierstrass_inner(0.0)
}

pub fn schaffer(x: &[f64]) -> f64 {
    let s: f64 = x.iter().map(|v| v * v).sum();
    let num = s.sqrt().sin().powi(2) - 0.5;
    let den = (1.0 + 0.001 * s).powi(2);
    0.5 + num / den
}
