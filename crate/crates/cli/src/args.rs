use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use runnerbench::Algorithm;

#[derive(Debug, Parser)]
#[command(
    name = "runnerbench",
    version,
    about = "Plant propagation and bee colony optimizers with a seeded benchmark harness"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one solver on one function and print a one-line summary.
    Solve(SolveArgs),
    /// Run a grid of (algorithm, function, dimension) cells with repeated seeds.
    Bench(BenchArgs),
    /// List the registered test functions.
    Functions(FunctionsArgs),
    /// Turn a step-size trace into per-equation histograms.
    Trace(TraceArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Ppa,
    Mppa,
    Abc,
    Mabc,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Ppa => Algorithm::Ppa,
            AlgoArg::Mppa => Algorithm::Mppa,
            AlgoArg::Abc => Algorithm::Abc,
            AlgoArg::Mabc => Algorithm::Mabc,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RunFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
    #[value(alias = "md", alias = "markdown-table")]
    Markdown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Functions 1-18 at dimensions 30, 60, 100; 30 runs of 5000*dim evaluations.
    Scalable,
    /// The eight 2-D problems (ids 101-108); 10 runs of 20000 evaluations, np 10.
    LowDim,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub algo: AlgoArg,
    /// Function id: 1-18, or 101-108 for the 2-D problems.
    #[arg(long = "fn", value_name = "ID")]
    pub function: u32,
    /// Dimension [default: 30, or 2 for the 2-D problems].
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long, default_value_t = 75)]
    pub np: usize,
    /// Evaluation budget [default: 5000 * dim].
    #[arg(long = "max-eval")]
    pub max_eval: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Runners per plant: n_max for ppa, n_r for mppa.
    #[arg(long, default_value_t = 5)]
    pub runners: usize,
    /// Probability of moving each coordinate in mabc.
    #[arg(long = "mr", default_value_t = 0.4)]
    pub modification_rate: f64,
    /// Write the mppa step-size trace as CSV (generation,equation,magnitude).
    #[arg(long, value_name = "FILE")]
    pub trace: Option<PathBuf>,
    /// Write the run report here.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// json: full run report; csv: best objective per generation.
    #[arg(long, value_enum, requires = "out")]
    pub format: Option<RunFormat>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Preset for every list and budget not given explicitly.
    #[arg(long, value_enum, default_value = "scalable")]
    pub suite: Suite,
    /// Comma-separated algorithms [default: abc,mabc,mppa; low-dim: ppa,mppa].
    #[arg(long, value_delimiter = ',', value_enum)]
    pub algos: Option<Vec<AlgoArg>>,
    /// Function ids, e.g. `1,2,5-9` [default: 1-18; low-dim: 101-108].
    #[arg(long)]
    pub fns: Option<String>,
    /// Comma-separated dimensions for scalable functions [default: 30,60,100].
    #[arg(long, value_delimiter = ',')]
    pub dims: Option<Vec<usize>>,
    /// Runs per cell [default: 30; low-dim: 10].
    #[arg(long)]
    pub runs: Option<usize>,
    /// Population size [default: 75; low-dim: 10].
    #[arg(long)]
    pub np: Option<usize>,
    /// Fixed evaluation budget per run [default: 5000 * dim; low-dim: 20000].
    #[arg(long = "max-eval")]
    pub max_eval: Option<u64>,
    /// Base seed; run r uses seed + r.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CatalogueFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct FunctionsArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: CatalogueFormat,
    /// Also list the 2-D problems (ids 101-108).
    #[arg(long)]
    pub include_low_dim: bool,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    /// Trace CSV written by `solve --trace`.
    pub input: PathBuf,
    #[arg(long, default_value_t = 20)]
    pub bins: usize,
    /// Histogram CSV (equation,bin,lower,upper,count).
    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,
}

/// Parses `1,3,5-9` into ids.
pub fn parse_id_list(s: &str) -> Result<Vec<u32>, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once('-') {
            Some((a, b)) => {
                let a: u32 = a.trim().parse().map_err(|_| format!("bad id range `{part}`"))?;
                let b: u32 = b.trim().parse().map_err(|_| format!("bad id range `{part}`"))?;
                if a > b {
                    return Err(format!("empty id range `{part}`"));
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| format!("bad function id `{part}`"))?),
        }
    }
    if out.is_empty() {
        return Err("no function ids given".into());
    }
    Ok(out)
}
