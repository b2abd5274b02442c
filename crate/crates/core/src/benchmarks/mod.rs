//! Registry of test functions.
//!
//! Ids 1 to 18 are the scalable functions (any dimension, bounds replicated
//! per coordinate). Ids 101 to 108 are fixed two-dimensional problems used
//! for small-scale comparisons; they are resolved through [`resolve`] but are
//! not part of [`catalogue`].

pub mod low_dim;
pub mod scalable;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::RngStream;
use crate::space::SearchSpace;

/// Modality / separability class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Class {
    /// Unimodal, separable.
    US,
    /// Unimodal, non-separable.
    UN,
    /// Multimodal, separable.
    MS,
    /// Multimodal, non-separable.
    MN,
    /// Multimodal.
    M,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Class::US => "US",
            Class::UN => "UN",
            Class::MS => "MS",
            Class::MN => "MN",
            Class::M => "M",
        };
        f.write_str(s)
    }
}

/// Where the global minimum is attained.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Minimizer {
    /// Every coordinate equal to this value.
    Constant(f64),
    /// A fixed point (low-dimensional problems).
    Point(Vec<f64>),
}

type Formula = fn(&[f64]) -> f64;

#[derive(Clone, Copy)]
enum Kind {
    Pure(Formula),
    Noisy(fn(&[f64], &mut RngStream) -> f64),
}

/// A resolved test function: formula, bounds at a given dimension and known optimum.
#[derive(Clone)]
pub struct ObjectiveSpec {
    pub id: u32,
    pub name: &'static str,
    pub lower: f64,
    pub upper: f64,
    pub class: Option<Class>,
    pub known_min_value: f64,
    pub minimizer: Minimizer,
    pub stochastic: bool,
    dim: usize,
    kind: Kind,
}

impl fmt::Debug for ObjectiveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ObjectiveSpec")
            .field("id", &self.id)
            .field("name", &self.name)
            .field("range", &(self.lower, self.upper))
            .field("dim", &self.dim)
            .finish()
    }
}

struct Row {
    id: u32,
    name: &'static str,
    range: (f64, f64),
    class: Option<Class>,
    min: f64,
    minimizer: fn(usize) -> Minimizer,
    kind: Kind,
    fixed_dim: Option<usize>,
}

fn origin(_: usize) -> Minimizer {
    Minimizer::Constant(0.0)
}

fn ones(_: usize) -> Minimizer {
    Minimizer::Constant(1.0)
}

/// Location of the 1-D Schwefel minimum, `x sin(sqrt|x|)` maximized on `[-500, 500]`.
pub const SCHWEFEL_ARGMIN: f64 = 420.968_746_359_982;

fn schwefel_point(_: usize) -> Minimizer {
    Minimizer::Constant(SCHWEFEL_ARGMIN)
}

const fn scalable(
    id: u32,
    name: &'static str,
    range: (f64, f64),
    class: Class,
    minimizer: fn(usize) -> Minimizer,
    f: Formula,
) -> Row {
    Row { id, name, range, class: Some(class), min: 0.0, minimizer, kind: Kind::Pure(f), fixed_dim: None }
}

const SCALABLE: [Row; 18] = [
    scalable(1, "Sphere", (-100.0, 100.0), Class::US, origin, scalable::sphere),
    scalable(2, "Elliptic", (-100.0, 100.0), Class::US, origin, scalable::elliptic),
    // Name kept from the source table; the formula is sum |x_i|^(i+1).
    scalable(3, "Axis Parallel Hyperellipsoid", (-10.0, 10.0), Class::US, origin, scalable::powered_abs),
    scalable(4, "Step", (-100.0, 100.0), Class::US, origin, scalable::step),
    scalable(5, "De Jong's 4 (no noise)", (-1.28, 1.28), Class::US, origin, scalable::quartic),
    Row {
        id: 6,
        name: "Quartic (noise)",
        range: (-1.28, 1.28),
        class: Some(Class::US),
        min: 0.0,
        minimizer: origin,
        kind: Kind::Noisy(scalable::noisy_quartic),
        fixed_dim: None,
    },
    // Name kept from the source table; the formula is sum i x_i^2.
    scalable(7, "Sum of Different Powers", (-10.0, 10.0), Class::UN, origin, scalable::weighted_sphere),
    scalable(8, "Schwefel's Problem 2.22", (-10.0, 10.0), Class::UN, origin, scalable::schwefel_2_22),
    scalable(9, "Schwefel's Problem 2.21", (-100.0, 100.0), Class::UN, origin, scalable::schwefel_2_21),
    scalable(10, "Rosenbrock", (-10.0, 10.0), Class::UN, ones, scalable::rosenbrock),
    scalable(11, "Rastrigin", (-5.12, 5.12), Class::MS, origin, scalable::rastrigin),
    scalable(12, "Non-Continuous Rastrigin", (-5.12, 5.12), Class::M, origin, scalable::noncontinuous_rastrigin),
    scalable(13, "Griewank", (-600.0, 600.0), Class::MN, origin, scalable::griewank),
    scalable(14, "Schwefel", (-500.0, 500.0), Class::MS, schwefel_point, scalable::schwefel),
    scalable(15, "Ackley's Path", (-32.0, 32.0), Class::MN, origin, scalable::ackley),
    scalable(16, "Alpine", (-10.0, 10.0), Class::M, origin, scalable::alpine),
    scalable(17, "Weierstrass", (-0.5, 0.5), Class::M, origin, scalable::weierstrass),
    scalable(18, "Schaffer", (-100.0, 100.0), Class::MN, origin, scalable::schaffer),
];

fn camel_point(_: usize) -> Minimizer {
    Minimizer::Point(vec![0.089_842_008_935_272_5, -0.712_656_403_020_719_7])
}
fn branin_point(_: usize) -> Minimizer {
    Minimizer::Point(vec![std::f64::consts::PI, 2.275])
}
fn easom_point(_: usize) -> Minimizer {
    Minimizer::Point(vec![std::f64::consts::PI, std::f64::consts::PI])
}
fn gp_point(_: usize) -> Minimizer {
    Minimizer::Point(vec![0.0, -1.0])
}
fn mg_point(_: usize) -> Minimizer {
    Minimizer::Point(vec![5.0, 5.0])
}

const fn low(
    id: u32,
    name: &'static str,
    range: (f64, f64),
    min: f64,
    minimizer: fn(usize) -> Minimizer,
    f: Formula,
) -> Row {
    Row { id, name, range, class: None, min, minimizer, kind: Kind::Pure(f), fixed_dim: Some(2) }
}

/// Minimum of the six-hump camel back function.
pub const CAMEL_MIN: f64 = -1.031_628_453_489_877;
/// Minimum of Branin, `5 / (4 pi)`.
pub const BRANIN_MIN: f64 = 0.397_887_357_729_738_16;
/// Minimum of the unshifted 2-D Schwefel function, `-2 * 418.98288727243369`.
pub const SCHWEFEL_2D_MIN: f64 = -837.965_774_544_867_4;

const LOW_DIM: [Row; 8] = [
    low(101, "Six-hump camel back", (-3.0, 2.0), CAMEL_MIN, camel_point, low_dim::six_hump_camel),
    low(102, "Branin", (-5.0, 15.0), BRANIN_MIN, branin_point, low_dim::branin),
    low(103, "Easom", (-100.0, 100.0), -1.0, easom_point, low_dim::easom),
    low(104, "Goldstein-Price", (-2.0, 2.0), 3.0, gp_point, low_dim::goldstein_price),
    low(105, "Martin-Gaddy", (-20.0, 20.0), 0.0, mg_point, low_dim::martin_gaddy),
    low(106, "Rastrigin 2-D", (-10.0, 10.0), 0.0, origin, scalable::rastrigin),
    low(107, "Rosenbrock 2-D", (-5.0, 10.0), 0.0, ones, scalable::rosenbrock),
    low(108, "Schwefel 2-D", (-500.0, 500.0), SCHWEFEL_2D_MIN, schwefel_point, low_dim::raw_schwefel),
];

/// Ids of the two-dimensional problems, in table order.
pub const LOW_DIM_IDS: [u32; 8] = [101, 102, 103, 104, 105, 106, 107, 108];

fn row(id: u32) -> Option<&'static Row> {
    SCALABLE.iter().chain(LOW_DIM.iter()).find(|r| r.id == id)
}

fn build(r: &Row, dim: usize) -> ObjectiveSpec {
    ObjectiveSpec {
        id: r.id,
        name: r.name,
        lower: r.range.0,
        upper: r.range.1,
        class: r.class,
        known_min_value: r.min,
        minimizer: (r.minimizer)(dim),
        stochastic: matches!(r.kind, Kind::Noisy(_)),
        dim,
        kind: r.kind,
    }
}

/// One of the eighteen scalable functions at dimension `dim`.
pub fn lookup(id: u32, dim: usize) -> Result<ObjectiveSpec> {
    let r = SCALABLE.iter().find(|r| r.id == id).ok_or_else(|| Error::UnknownFunction { id, valid: "1-18".into() })?;
    if dim == 0 {
        return Err(Error::InvalidConfig("dimension must be at least 1".into()));
    }
    Ok(build(r, dim))
}

/// Any registered function. Two-dimensional problems reject other dimensions.
pub fn resolve(id: u32, dim: usize) -> Result<ObjectiveSpec> {
    let r = row(id).ok_or_else(|| Error::UnknownFunction { id, valid: "1-18, 101-108".into() })?;
    match r.fixed_dim {
        Some(d) if d != dim => Err(Error::DimensionMismatch { expected: d, got: dim }),
        _ if dim == 0 => Err(Error::InvalidConfig("dimension must be at least 1".into())),
        _ => Ok(build(r, dim)),
    }
}

/// Native dimension of a fixed-size problem, `None` for scalable ones.
pub fn fixed_dim(id: u32) -> Option<usize> {
    row(id).and_then(|r| r.fixed_dim)
}

/// Row of the function listing.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogueEntry {
    pub id: u32,
    pub name: String,
    pub lower: f64,
    pub upper: f64,
    pub class: Option<Class>,
    pub min: f64,
}

fn entry(r: &Row) -> CatalogueEntry {
    CatalogueEntry {
        id: r.id,
        name: r.name.to_string(),
        lower: r.range.0,
        upper: r.range.1,
        class: r.class,
        min: r.min,
    }
}

/// The eighteen scalable functions in table order.
pub fn catalogue() -> Vec<CatalogueEntry> {
    SCALABLE.iter().map(entry).collect()
}

/// The two-dimensional problems.
pub fn low_dim_catalogue() -> Vec<CatalogueEntry> {
    LOW_DIM.iter().map(entry).collect()
}

impl ObjectiveSpec {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn space(&self) -> SearchSpace {
        SearchSpace::uniform(self.lower, self.upper, self.dim).expect("registry ranges are proper intervals")
    }

    pub fn known_minimizer(&self) -> Vec<f64> {
        match &self.minimizer {
            Minimizer::Constant(c) => vec![*c; self.dim],
            Minimizer::Point(p) => p.clone(),
        }
    }

    /// Evaluates with a dimension check. `rng` supplies the noise term of
    /// stochastic functions and is untouched otherwise.
    pub fn evaluate_checked(&self, x: &[f64], rng: &mut RngStream) -> Result<f64> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        Ok(self.raw(x, rng))
    }

    fn raw(&self, x: &[f64], rng: &mut RngStream) -> f64 {
        match self.kind {
            Kind::Pure(f) => f(x),
            Kind::Noisy(f) => f(x, rng),
        }
    }
}

impl Objective for ObjectiveSpec {
    fn evaluate(&self, x: &[f64], rng: &mut RngStream) -> f64 {
        debug_assert_eq!(x.len(), self.dim);
        self.raw(x, rng)
    }
}
