use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use runnerbench::benchmarks::{self, CatalogueEntry};
use runnerbench::harness::{self, ExperimentPlan, ReportFormat};
use runnerbench::mppa::{read_trace_csv, trace_histogram, write_trace_csv, PerturbationTrace};
use runnerbench::solver::{solve, SolveRequest};
use runnerbench::{Algorithm, Error, RunReport};

use crate::args::{
    parse_id_list, BenchArgs, CatalogueFormat, Command, FunctionsArgs, RunFormat, SolveArgs, Suite, TableFormat,
    TraceArgs,
};

pub const THREADS_ENV: &str = "RUNNERBENCH_THREADS";

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    /// Errors caused by flag values are usage errors; the rest happen at run time.
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownFunction { .. }
            | Error::DimensionMismatch { .. }
            | Error::InvalidConfig(_)
            | Error::InvalidSpace(_)
            | Error::InsufficientPopulation { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::Runtime(format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| io_failure(path, e))
}

pub fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Solve(a) => run_solve(a),
        Command::Bench(a) => run_bench(a),
        Command::Functions(a) => run_functions(a),
        Command::Trace(a) => run_trace(a),
    }
}

fn run_solve(a: SolveArgs) -> Result<(), Failure> {
    let algorithm: Algorithm = a.algo.into();
    if a.trace.is_some() && algorithm != Algorithm::Mppa {
        return Err(Failure::Usage("--trace is only supported with --algo mppa".into()));
    }
    let dim = match (a.dim, benchmarks::fixed_dim(a.function)) {
        (Some(d), _) => d,
        (None, Some(d)) => d,
        (None, None) => 30,
    };
    let mut request = SolveRequest::new(algorithm, a.function, dim, a.seed);
    request.np = a.np;
    request.runners = a.runners;
    request.modification_rate = a.modification_rate;
    if let Some(e) = a.max_eval {
        request.max_eval = e;
    }

    let mut trace = a.trace.as_ref().map(|_| PerturbationTrace::default());
    let report = solve(&request, trace.as_mut())?;
    let spec = request.objective()?;

    if let (Some(path), Some(trace)) = (&a.trace, &trace) {
        let f = File::create(path).map_err(|e| io_failure(path, e))?;
        write_trace_csv(trace, BufWriter::new(f))?;
    }
    if let Some(path) = &a.out {
        let bytes = match a.format.unwrap_or(RunFormat::Json) {
            RunFormat::Json => {
                let mut v = serde_json::to_vec_pretty(&report).map_err(Error::from)?;
                v.push(b'\n');
                v
            }
            RunFormat::Csv => trajectory_csv(&report),
        };
        write_file(path, &bytes)?;
    }
    println!(
        "algo={} fn={} ({}) dim={} best={:e} n_eval={} seed={}",
        report.algorithm, spec.id, spec.name, dim, report.best.objective, report.n_eval, report.seed
    );
    Ok(())
}

fn trajectory_csv(report: &RunReport) -> Vec<u8> {
    let mut out = String::from("generation,best\n");
    for (g, v) in report.trajectory.iter().enumerate() {
        out.push_str(&format!("{g},{v}\n"));
    }
    out.into_bytes()
}

fn threads_from_env() -> Result<Option<usize>, Failure> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Failure::Runtime(format!("{THREADS_ENV} must be a positive integer, got `{v}`"))),
        },
        Err(_) => Ok(None),
    }
}

fn build_plan(a: &BenchArgs) -> Result<ExperimentPlan, Failure> {
    let mut plan = match a.suite {
        Suite::Scalable => ExperimentPlan::default(),
        Suite::LowDim => ExperimentPlan::low_dim_suite(),
    };
    if let Some(algos) = &a.algos {
        plan.algorithms = algos.iter().map(|&x| x.into()).collect();
    }
    if let Some(fns) = &a.fns {
        plan.functions = parse_id_list(fns).map_err(Failure::Usage)?;
    }
    if let Some(dims) = &a.dims {
        plan.dims = dims.clone();
    }
    if let Some(runs) = a.runs {
        plan.runs = runs;
    }
    if let Some(np) = a.np {
        plan.np = np;
    }
    if let Some(e) = a.max_eval {
        plan.max_eval = Some(e);
    }
    plan.base_seed = a.seed;
    Ok(plan)
}

fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().map(|n| n.to_os_string()).unwrap_or_default();
    name.push(".manifest.json");
    out.with_file_name(name)
}

fn run_bench(a: BenchArgs) -> Result<(), Failure> {
    let plan = build_plan(&a)?;
    let report = match threads_from_env()? {
        Some(n) => harness::run_experiment_with_threads(&plan, n)?,
        None => harness::run_experiment(&plan)?,
    };
    let format = match a.format {
        TableFormat::Csv => ReportFormat::Csv,
        TableFormat::Json => ReportFormat::Json,
        TableFormat::Markdown => ReportFormat::Markdown,
    };
    write_file(&a.out, &harness::export_report(&report, format)?)?;
    write_file(&manifest_path(&a.out), &harness::manifest(&plan)?)?;
    let failures: usize = report.cells.iter().map(|c| c.failures.len()).sum();
    println!("bench cells={} runs={} failures={} out={}", report.cells.len(), plan.runs, failures, a.out.display());
    Ok(())
}

fn run_functions(a: FunctionsArgs) -> Result<(), Failure> {
    let mut rows = benchmarks::catalogue();
    if a.include_low_dim {
        rows.extend(benchmarks::low_dim_catalogue());
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match a.format {
        CatalogueFormat::Json => {
            serde_json::to_writer_pretty(&mut out, &rows).map_err(Error::from)?;
            writeln!(out).map_err(Error::from)?;
        }
        CatalogueFormat::Csv => write_catalogue_csv(&rows, &mut out).map_err(Error::from)?,
    }
    Ok(())
}

fn write_catalogue_csv<W: Write>(rows: &[CatalogueEntry], out: &mut W) -> io::Result<()> {
    writeln!(out, "id,name,lower,upper,class,min")?;
    for r in rows {
        let class = r.class.map(|c| c.to_string()).unwrap_or_default();
        let name = if r.name.contains(',') { format!("\"{}\"", r.name) } else { r.name.clone() };
        writeln!(out, "{},{},{},{},{},{}", r.id, name, r.lower, r.upper, class, r.min)?;
    }
    Ok(())
}

fn run_trace(a: TraceArgs) -> Result<(), Failure> {
    if a.bins == 0 {
        return Err(Failure::Usage("--bins must be at least 1".into()));
    }
    let f = File::open(&a.input).map_err(|e| io_failure(&a.input, e))?;
    let trace = read_trace_csv(BufReader::new(f))?;
    let hist = trace_histogram(&trace, a.bins)?;
    let mut buf = Vec::new();
    hist.write_csv(&mut buf)?;
    write_file(&a.out, &buf)?;
    let eqs: Vec<String> = hist.equations.iter().map(|h| h.runner.equation().to_string()).collect();
    println!(
        "trace records={} bins={} equations={} out={}",
        trace.records().len(),
        a.bins,
        eqs.join(","),
        a.out.display()
    );
    Ok(())
}
