//! Classic two-dimensional problems used for the small-scale comparison.

use std::f64::consts::PI;

pub fn six_hump_camel(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (4.0 - 2.1 * a * a + a.powi(4) / 3.0) * a * a + a * b + (-4.0 + 4.0 * b * b) * b * b
}

pub fn branin(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let bb = 5.1 / (4.0 * PI * PI);
    let c = 5.0 / PI;
    let t = 1.0 / (8.0 * PI);
    let q = b - bb * a * a + c * a - 6.0;
    q * q + 10.0 * (1.0 - t) * a.cos() + 10.0
}

pub fn easom(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    -a.cos() * b.cos() * (-((a - PI).powi(2) + (b - PI).powi(2))).exp()
}

pub fn goldstein_price(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let p = 1.0 + (a + b + 1.0).powi(2) * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    let q =
        30.0 + (2.0 * a - 3.0 * b).powi(2) * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    p * q
}

pub fn martin_gaddy(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (a - b).powi(2) + ((a + b - 10.0) / 3.0).powi(2)
}

/// Unshifted Schwefel, `-sum x_i sin(sqrt|x_i|)`.
pub fn raw_schwefel(x: &[f64]) -> f64 {
    -x.iter().map(|v| v * v.abs().sqrt().sin()).sum::<f64>()
}
