use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use adaptive_search::{load_dataset, Algorithm, Engine, EngineConfig, SelectorConfig};
use adaptive_search_bench::{
    emit_report, generate, run_suite, BenchError, DistributionKind, DistributionSpec, QueryMode, ReportFormat,
    SuiteConfig, TrialAlgorithm,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;

#[derive(Parser)]
#[command(
    name = "adsearch",
    version,
    about = "Adaptive sorted-key search: datasets, lookups and benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated dataset in line format.
    Gen(GenArgs),
    /// Run one query against a dataset file.
    Search(SearchArgs),
    /// Run the benchmark suite and emit a report.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum DistArg {
    Uniform,
    Clustered,
    Exponential,
    Zipf,
}

#[derive(Args)]
struct DistParams {
    /// Uniform: smallest key.
    #[arg(long)]
    lo: Option<i64>,
    /// Uniform: largest key.
    #[arg(long)]
    hi: Option<i64>,
    /// Clustered: number of clusters.
    #[arg(long)]
    clusters: Option<usize>,
    /// Clustered: standard deviation around each centre.
    #[arg(long)]
    spread: Option<f64>,
    /// Exponential: key scale.
    #[arg(long)]
    scale: Option<f64>,
    /// Zipf: exponent s > 0.
    #[arg(long)]
    exponent: Option<f64>,
    /// Zipf: universe size m.
    #[arg(long)]
    universe: Option<u64>,
}

impl DistParams {
    fn kind(&self, dist: DistArg) -> DistributionKind {
        type K = DistributionKind;
        match dist {
            DistArg::Uniform => K::Uniform {
                lo: self.lo.unwrap_or(K::UNIFORM_LO),
                hi: self.hi.unwrap_or(K::UNIFORM_HI),
            },
            DistArg::Clustered => K::Clustered {
                clusters: self.clusters.unwrap_or(K::CLUSTERS),
                spread: self.spread.unwrap_or(K::CLUSTER_SPREAD),
            },
            DistArg::Exponential => K::Exponential {
                scale: self.scale.unwrap_or(K::EXPONENTIAL_SCALE),
            },
            DistArg::Zipf => K::Zipf {
                exponent: self.exponent.unwrap_or(K::ZIPF_EXPONENT),
                universe: self.universe.unwrap_or(K::ZIPF_UNIVERSE),
            },
        }
    }
}

#[derive(Args)]
struct EngineArgs {
    /// Largest gap coefficient of variation that still selects interpolation.
    #[arg(long, default_value_t = SelectorConfig::DEFAULT_TAU)]
    tau: f64,
    /// Datasets shorter than this always use binary search.
    #[arg(long, default_value_t = SelectorConfig::DEFAULT_MIN_INTERP_LEN)]
    min_interp_len: usize,
    /// Maximum number of gaps examined when scoring a dataset.
    #[arg(long, default_value_t = SelectorConfig::DEFAULT_MAX_GAP_SAMPLES)]
    gap_samples: usize,
    /// Result cache capacity.
    #[arg(long, default_value_t = EngineConfig::DEFAULT_CACHE_CAPACITY)]
    cache_size: usize,
}

impl EngineArgs {
    fn config(&self) -> EngineConfig {
        EngineConfig {
            selector: SelectorConfig {
                tau: self.tau,
                min_interp_len: self.min_interp_len,
                max_gap_samples: self.gap_samples,
            },
            cache_capacity: self.cache_size,
            override_algorithm: None,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    dist: DistArg,
    #[arg(long)]
    n: usize,
    /// RNG seed; drawn from entropy and printed to stderr when absent.
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    params: DistParams,
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    /// Dataset file in line format.
    #[arg(long)]
    dataset: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    target: i64,
    /// Force a kernel instead of the selector's choice.
    #[arg(long)]
    algorithm: Option<Algorithm>,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Members,
    Mixed,
    Repeated,
}

#[derive(Args)]
struct BenchArgs {
    /// Master seed; drawn from entropy and printed when absent.
    #[arg(long)]
    seed: Option<u64>,
    /// table, csv or jsonl.
    #[arg(long, default_value = "table")]
    format: String,
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Queries per cell.
    #[arg(long, default_value_t = SuiteConfig::DEFAULT_QUERIES)]
    queries: usize,
    /// Dataset sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Distributions, comma separated.
    #[arg(long, value_delimiter = ',', value_enum)]
    dists: Option<Vec<DistArg>>,
    /// Algorithms, comma separated (binary, interpolation, linear, adaptive).
    #[arg(long, value_delimiter = ',')]
    algorithms: Option<Vec<TrialAlgorithm>>,
    #[arg(long, value_enum, default_value = "members")]
    mode: ModeArg,
    /// Replay probability for `--mode repeated`.
    #[arg(long, default_value_t = 0.5)]
    repeat_fraction: f64,
    #[command(flatten)]
    params: DistParams,
    #[command(flatten)]
    engine: EngineArgs,
}

fn output(path: Option<&PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn seed_or_entropy(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        let s = rand::rng().random();
        eprintln!("seed: {s}");
        s
    })
}

fn cmd_gen(args: GenArgs) -> Result<(), BenchError> {
    let spec = DistributionSpec {
        kind: args.params.kind(args.dist),
        n: args.n,
        seed: seed_or_entropy(args.seed),
    };
    let ds = generate(&spec)?;
    ds.write_lines(io::BufWriter::new(output(args.out.as_ref())?))?;
    Ok(())
}

fn cmd_search(args: SearchArgs) -> Result<(), BenchError> {
    let ds = load_dataset(BufReader::new(File::open(&args.dataset)?))?;
    let mut cfg = args.engine.config();
    cfg.override_algorithm = args.algorithm;
    let mut engine = Engine::new(cfg)?;
    let reg = engine.register(ds);
    let r = engine.adaptive_search(&reg, args.target);
    let visited: Vec<String> = r.outcome.trace.visited().map(|i| i.to_string()).collect();
    let mut out = io::stdout().lock();
    writeln!(out, "dataset: {} (n={})", reg.dataset.id(), reg.dataset.len())?;
    writeln!(
        out,
        "selected: {} ({:?}, uniformity={:.6}{})",
        reg.choice.algorithm,
        reg.choice.reason,
        reg.stats.uniformity_score,
        if reg.stats.sampled { ", sampled" } else { "" }
    )?;
    writeln!(out, "served_by: {}", r.route)?;
    writeln!(out, "cache_hit: {}", r.cache_hit)?;
    match r.outcome.index {
        Some(i) => writeln!(out, "found: true\nindex: {i}")?,
        None => writeln!(out, "found: false")?,
    }
    writeln!(out, "probes: {}", r.outcome.trace.probes())?;
    writeln!(out, "visited: [{}]", visited.join(", "))?;
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> Result<(), BenchError> {
    let format: ReportFormat = args.format.parse()?;
    let seed = seed_or_entropy(args.seed);
    let mut cfg = SuiteConfig::with_seed(seed);
    cfg.queries = args.queries;
    cfg.engine = args.engine.config();
    cfg.engine.validate()?;
    if let Some(sizes) = args.sizes {
        cfg.sizes = sizes;
    }
    if let Some(dists) = args.dists {
        cfg.distributions = dists.into_iter().map(|d| args.params.kind(d)).collect();
    }
    if let Some(algorithms) = args.algorithms {
        cfg.algorithms = algorithms;
    }
    cfg.query_mode = match args.mode {
        ModeArg::Members => QueryMode::MembersOnly,
        ModeArg::Mixed => QueryMode::Mixed,
        ModeArg::Repeated => QueryMode::Repeated {
            fraction: args.repeat_fraction,
        },
    };
    let records = run_suite(&cfg)?;
    let mut out = output(args.out.as_ref())?;
    if format == ReportFormat::Table {
        writeln!(
            out,
            "# seed {seed}, {} queries per cell, {}",
            cfg.queries,
            cfg.query_mode.name()
        )?;
    }
    out.write_all(emit_report(&records, format).as_bytes())?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Search(a) => cmd_search(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
