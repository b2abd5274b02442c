//! Fixtures shared by the criterion benchmarks in `benches/`.

use runnerbench::benchmarks::{self, ObjectiveSpec};
use runnerbench::solver::SolveRequest;
use runnerbench::Algorithm;

/// A registered function at the given dimension.
pub fn function(id: u32, dim: usize) -> ObjectiveSpec {
    benchmarks::resolve(id, dim).expect("registered function")
}

/// A short solver run: the default protocol scaled down to `max_eval` evaluations.
pub fn short_run(algorithm: Algorithm, function_id: u32, dim: usize, max_eval: u64) -> SolveRequest {
    SolveRequest { max_eval, ..SolveRequest::new(algorithm, function_id, dim, 42) }
}
