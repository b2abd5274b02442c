//! Plant propagation and bee colony optimizers for box-constrained
//! minimization, a registry of classic test functions, and a harness for
//! repeated seeded experiments.
//!
//! ```
//! use runnerbench::{benchmarks, mppa::{run_mppa, MppaConfig}};
//!
//! let sphere = benchmarks::lookup(1, 5).unwrap();
//! let config = MppaConfig { np: 20, n_r: 5, max_gen: u64::MAX, max_eval: 20_000, seed: 1 };
//! let report = run_mppa(&config, &sphere.space(), &sphere, None).unwrap();
//! assert!(report.best.objective < 1e-6);
//! assert!(report.n_eval <= 20_000);
//! ```

pub mod abc;
pub mod benchmarks;
pub mod budget;
pub mod error;
pub mod harness;
pub mod mppa;
pub mod objective;
pub mod population;
pub mod ppa;
pub mod report;
pub mod rng;
pub mod solver;
pub mod space;

pub use budget::EvalBudget;
pub use error::{Error, Result};
pub use objective::{Evaluator, Objective};
pub use population::{Candidate, Population};
pub use report::{Algorithm, RunReport, SolverParams};
pub use rng::RngStream;
pub use space::SearchSpace;
