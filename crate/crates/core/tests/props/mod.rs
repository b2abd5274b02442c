//! Solver and harness invariants, shared by the property and acceptance targets.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use runnerbench::abc::{self, fitness, roulette_with, AbcConfig, AbcVariant};
use runnerbench::benchmarks::lookup;
use runnerbench::harness::summarize;
use runnerbench::mppa::{self, propagate_individual, MppaConfig, PerturbationTrace, Propagation, Runner};
use runnerbench::ppa::{self, normalize_objectives, PpaConfig};
use runnerbench::solver::{solve, SolveRequest};
use runnerbench::{Algorithm, Candidate, EvalBudget, Evaluator, RngStream, SearchSpace};

use crate::common::{chi_square, naive_stats, non_increasing, Instrumented};

fn random_space(rng: &mut RngStream, dim: usize) -> SearchSpace {
    let lower: Vec<f64> = (0..dim).map(|_| -1000.0 + 1500.0 * rng.uniform()).collect();
    let upper: Vec<f64> = lower.iter().map(|a| a + 1e-3 + 500.0 * rng.uniform()).collect();
    SearchSpace::new(lower, upper).unwrap()
}

pub fn runner_count_and_offset_envelopes() {
    let mut rng = RngStream::new(10);
    for _ in 0..100_000 {
        let n = rng.open_unit();
        let n_max = 1 + rng.index(10);
        let k = ppa::runner_count(n, n_max, &mut rng);
        assert!((1..=n_max).contains(&k));
        let dx = ppa::runner_offset(n, 3, &mut rng);
        assert!(dx.iter().all(|d| d.abs() <= 1.0 - n), "{dx:?} for N={n}");
    }
}

pub fn perturbations_stay_feasible() {
    let mut rng = RngStream::new(11);
    for i in 0..100_000 {
        let space = random_space(&mut rng, 1 + i % 4);
        let x = space.uniform_init(&mut rng);
        let p = space.uniform_init(&mut rng);
        let q = space.uniform_init(&mut rng);
        let n = rng.open_unit();
        let ys = [
            mppa::perturb_self(&x, &space, &mut rng),
            mppa::perturb_upper(&x, &space, &mut rng),
            mppa::perturb_lower(&x, &space, &mut rng),
            ppa::apply_runner(&x, &ppa::runner_offset(n, x.len(), &mut rng), &space),
            abc::neighbor_candidate(&x, &p, &space, &mut rng),
            abc::mabc_candidate(&x, &p, &q, &x, 0.4, &space, &mut rng),
        ];
        for y in ys {
            assert!(space.contains(&y), "{y:?} outside {space:?}");
        }
    }
}

pub fn self_scaled_zero_is_fixed() {
    let space = SearchSpace::uniform(-5.0, 5.0, 6).unwrap();
    let mut rng = RngStream::new(12);
    for _ in 0..10_000 {
        assert_eq!(mppa::perturb_self(&[0.0; 6], &space, &mut rng), vec![0.0; 6]);
    }
}

/// Replays the runner sequence from the trace and checks every cascade decision.
pub fn cascade_gating_on_many_propagations() {
    let spec = lookup(11, 4).unwrap();
    let space = spec.space();
    let n_r = 5;
    let mut rng = RngStream::new(13);
    for call in 0..1_000 {
        let x = space.uniform_init(&mut rng);
        let parent = Candidate::new(x.clone(), runnerbench::Objective::evaluate(&spec, &x, &mut rng));
        let mut evaluator = Evaluator::new(&spec, EvalBudget::new(u64::MAX, u64::MAX));
        let mut trace = PerturbationTrace::default();
        let off = {
            let mut ctx = Propagation {
                space: &space,
                evaluator: &mut evaluator,
                rng: &mut rng,
                trace: Some(&mut trace),
                generation: call,
            };
            propagate_individual(&parent, n_r, &mut ctx).unwrap()
        };
        let n = off.candidates.len();
        assert!((n_r..=3 * n_r).contains(&n));
        assert_eq!(evaluator.budget().n_eval() as usize, n);

        let runners: Vec<Runner> = trace.records().chunks(4).map(|c| c[0].runner).collect();
        assert_eq!(runners.len(), n);
        let mut passes = 0;
        for (i, (c, r)) in off.candidates.iter().zip(&runners).enumerate() {
            let next = runners.get(i + 1).copied();
            let not_better = c.objective >= parent.objective;
            match r {
                Runner::SelfScaled => {
                    passes += 1;
                    assert_eq!(next == Some(Runner::UpperScaled), not_better);
                }
                Runner::UpperScaled => assert_eq!(next == Some(Runner::LowerScaled), not_better),
                Runner::LowerScaled => assert!(next.is_none() || next == Some(Runner::SelfScaled)),
            }
        }
        assert_eq!(passes, n_r);
    }
}

pub fn budget_cap_matches_objective_calls() {
    let spec = lookup(13, 5).unwrap();
    for algo in Algorithm::ALL {
        for max_eval in [75, 76, 999, 4_321] {
            let req = SolveRequest { max_eval, np: 10, ..SolveRequest::new(algo, 13, 5, 3) };
            let counted = Instrumented::new(&spec, spec.space());
            let report = runnerbench::solver::run_params(&req.params(), &spec, None);
            let report_counted = match req.params() {
                runnerbench::SolverParams::Ppa(c) => ppa::run_ppa(&c, &spec.space(), &counted),
                runnerbench::SolverParams::Mppa(c) => mppa::run_mppa(&c, &spec.space(), &counted, None),
                runnerbench::SolverParams::Abc(c) => abc::run_abc(&c, &spec.space(), &counted),
            }
            .unwrap();
            assert_eq!(report_counted.n_eval, counted.calls(), "{algo}");
            assert_eq!(report_counted.n_eval, max_eval, "{algo}");
            assert!(!counted.saw_infeasible(), "{algo}");
            assert!(report.unwrap().bit_identical(&report_counted));
        }
    }
}

pub fn identical_seeds_give_identical_reports() {
    for algo in Algorithm::ALL {
        for id in [1, 6, 15] {
            let req = SolveRequest { max_eval: 3_000, np: 12, ..SolveRequest::new(algo, id, 6, 77) };
            let a = solve(&req, None).unwrap();
            let b = solve(&req, None).unwrap();
            assert!(a.bit_identical(&b), "{algo} fn {id}");
            let other = solve(&SolveRequest { seed: 78, ..req.clone() }, None).unwrap();
            assert!(!a.bit_identical(&other));
        }
    }
}

pub fn trajectories_never_increase() {
    for algo in Algorithm::ALL {
        for id in [2, 9, 11, 14, 18] {
            let r =
                solve(&SolveRequest { max_eval: 5_000, np: 15, ..SolveRequest::new(algo, id, 8, 5) }, None).unwrap();
            assert!(non_increasing(&r.trajectory), "{algo} fn {id}: {:?}", r.trajectory);
            assert_eq!(r.trajectory.last().copied(), Some(r.best.objective));
        }
    }
}

pub fn solvers_improve_on_sphere() {
    let spec = lookup(1, 2).unwrap();
    let space = spec.space();
    let mut bests: Vec<f64> = (0..10)
        .map(|s| {
            let c = PpaConfig { np: 10, n_max: 3, g_max: u64::MAX, max_eval: 10_000, seed: s };
            ppa::run_ppa(&c, &space, &spec).unwrap().best.objective
        })
        .collect();
    bests.sort_by(f64::total_cmp);
    let median = 0.5 * (bests[4] + bests[5]);
    assert!(median <= 1e-4, "ppa sphere median {median}");

    let rosen = lookup(10, 2).unwrap();
    let rs = SearchSpace::uniform(-5.0, 10.0, 2).unwrap();
    let best = (0..10)
        .map(|s| {
            let c = PpaConfig { np: 10, n_max: 5, g_max: u64::MAX, max_eval: 20_000, seed: s };
            ppa::run_ppa(&c, &rs, &rosen).unwrap().best.objective
        })
        .fold(f64::INFINITY, f64::min);
    assert!(best <= 2.0e-4, "ppa rosenbrock best {best}");
}

pub fn mppa_low_dim_examples() {
    for (id, target) in [(106u32, 1e-6), (108, -837.0)] {
        let best = (0..10)
            .map(|s| {
                let req = SolveRequest { np: 10, max_eval: 20_000, ..SolveRequest::new(Algorithm::Mppa, id, 2, s) };
                solve(&req, None).unwrap().best.objective
            })
            .fold(f64::INFINITY, f64::min);
        assert!(best <= target, "fn {id}: {best}");
    }
}

pub fn roulette_matches_fitness_proportions() {
    let objectives = [0.0, 1.0, 3.0, 9.0];
    let weights: Vec<f64> = objectives.iter().map(|&f| fitness(f)).collect();
    let total: f64 = weights.iter().sum();
    let probs: Vec<f64> = weights.iter().map(|w| w / total).collect();
    let mut rng = RngStream::new(14);
    let mut counts = [0u64; 4];
    for _ in 0..100_000 {
        counts[roulette_with(&weights, rng.uniform())] += 1;
    }
    // 3 degrees of freedom, 0.1% critical value
    let chi = chi_square(&counts, &probs);
    assert!(chi < 16.27, "chi-square {chi}, counts {counts:?}");
}

pub fn abc_greedy_sources_never_worsen() {
    let spec = lookup(1, 5).unwrap();
    let cfg = AbcConfig {
        sn: 8,
        limit: u64::MAX,
        max_eval: 4_000,
        seed: 2,
        variant: AbcVariant::Classic,
        modification_rate: 0.4,
    };
    let (report, stats) = abc::run_abc_detailed(&cfg, &spec.space(), &spec).unwrap();
    assert_eq!(stats.scout_events, 0);
    assert_eq!(stats.improvements + stats.failures + 8, report.n_eval);
    assert!(non_increasing(&report.trajectory));
}

pub fn summarize_matches_naive_oracle() {
    let mut rng = RngStream::new(15);
    for i in 0..1_000 {
        let n = 1 + rng.index(60);
        let scale = 10f64.powi(rng.index(20) as i32 - 10);
        let v: Vec<f64> = (0..n).map(|_| (rng.uniform() - 0.3) * scale).collect();
        let s = summarize(&v).unwrap();
        let o = naive_stats(&v);
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * b.abs().max(scale * 1e-3);
        assert_eq!(s.best, o.min, "case {i}");
        assert_eq!(s.worst, o.max, "case {i}");
        assert_eq!(s.median, o.median, "case {i}");
        assert!(close(s.mean, o.mean), "case {i}: {} vs {}", s.mean, o.mean);
        assert!(close(s.sd, o.sd), "case {i}: {} vs {}", s.sd, o.sd);
    }
}

pub fn thirty_seeded_draws_match_oracle() {
    let mut rng = RngStream::new(30);
    let v: Vec<f64> = (0..30).map(|_| rng.uniform()).collect();
    let s = summarize(&v).unwrap();
    let o = naive_stats(&v);
    for (a, b) in [(s.best, o.min), (s.worst, o.max), (s.median, o.median), (s.mean, o.mean), (s.sd, o.sd)] {
        assert!((a - b).abs() <= 1e-12, "{a} vs {b}");
    }
}

pub fn mppa_config_validation() {
    let space = SearchSpace::uniform(-1.0, 1.0, 2).unwrap();
    let f = |x: &[f64]| x[0] * x[0];
    let good = MppaConfig { np: 5, n_r: 1, max_gen: 10, max_eval: 100, seed: 0 };
    assert!(mppa::run_mppa(&good, &space, &f, None).is_ok());
    for bad in [
        MppaConfig { np: 1, ..good.clone() },
        MppaConfig { n_r: 0, ..good.clone() },
        MppaConfig { max_eval: 4, ..good.clone() },
    ] {
        assert!(mppa::run_mppa(&bad, &space, &f, None).is_err());
    }
}

pub fn non_finite_objective_aborts_run() {
    let space = SearchSpace::uniform(-1.0, 1.0, 2).unwrap();
    let f = |x: &[f64]| if x[0] > 0.9 { f64::NAN } else { x[0] };
    let cfg = MppaConfig { np: 20, n_r: 5, max_gen: 100, max_eval: 100_000, seed: 1 };
    assert!(matches!(mppa::run_mppa(&cfg, &space, &f, None), Err(runnerbench::Error::NonFiniteObjective { .. })));
}

pub fn normalization_preserves_ranking() {
    let strategy = (prop::collection::vec(-1e6f64..1e6, 2..40), 1e-3f64..1e3, -1e3f64..1e3);
    let config = Config { failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
        .run(&strategy, |(values, scale, shift)| {
            let n = normalize_objectives(&values).0;
            prop_assert!(n.iter().all(|&v| v > 0.0 && v < 1.0));
            let rescaled: Vec<f64> = values.iter().map(|v| v * scale + shift).collect();
            let m = normalize_objectives(&rescaled).0;
            for i in 0..values.len() {
                for j in 0..values.len() {
                    if values[i] < values[j] {
                        prop_assert!(n[i] >= n[j]);
                        prop_assert!(m[i] >= m[j]);
                    }
                }
            }
            Ok(())
        })
        .unwrap();
}

/// Every check, by name.
pub const CHECKS: &[(&str, fn())] = &[
    ("runner_count_and_offset_envelopes", runner_count_and_offset_envelopes),
    ("perturbations_stay_feasible", perturbations_stay_feasible),
    ("self_scaled_zero_is_fixed", self_scaled_zero_is_fixed),
    ("cascade_gating_on_many_propagations", cascade_gating_on_many_propagations),
    ("budget_cap_matches_objective_calls", budget_cap_matches_objective_calls),
    ("identical_seeds_give_identical_reports", identical_seeds_give_identical_reports),
    ("trajectories_never_increase", trajectories_never_increase),
    ("solvers_improve_on_sphere", solvers_improve_on_sphere),
    ("mppa_low_dim_examples", mppa_low_dim_examples),
    ("roulette_matches_fitness_proportions", roulette_matches_fitness_proportions),
    ("abc_greedy_sources_never_worsen", abc_greedy_sources_never_worsen),
    ("summarize_matches_naive_oracle", summarize_matches_naive_oracle),
    ("thirty_seeded_draws_match_oracle", thirty_seeded_draws_match_oracle),
    ("mppa_config_validation", mppa_config_validation),
    ("non_finite_objective_aborts_run", non_finite_objective_aborts_run),
    ("normalization_preserves_ranking", normalization_preserves_ranking),
];
