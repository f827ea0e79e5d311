mod stats;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use sgkplex::enumerate::{format_results, run, Algo, RunConfig};
use sgkplex::gen::{edges_to_text, planted_edges, GenSpec};
use sgkplex::graph::{load_signed_edge_list, SignedGraph};
use sgkplex::oracle::enumerate_bruteforce;
use sgkplex::Params;

use stats::{peak_rss_bytes, RunStats};

#[derive(Parser)]
#[command(name = "sgkplex", version, about = "Maximal antagonistic k-plex enumeration in signed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all qualified maximal antagonistic k-plexes
    Enumerate(EnumerateArgs),
    /// Exhaustive reference enumeration for small graphs (n <= 20)
    Oracle(CommonArgs),
    /// Generate a synthetic signed graph with planted communities
    Gen(GenArgs),
    /// Sweep (k, t, algorithm) cells and emit timing CSV
    Bench(BenchArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Signed edge-list file ("u v s", s in {1,-1,+,-}, '#' comments)
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    t: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Bape,
    Sanc,
    Sape,
}

impl From<AlgoArg> for Algo {
    fn from(a: AlgoArg) -> Algo {
        match a {
            AlgoArg::Bape => Algo::Bape,
            AlgoArg::Sanc => Algo::Sanc,
            AlgoArg::Sape => Algo::Sape,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Mode {
    List,
    Count,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum, default_value = "sape")]
    algo: AlgoArg,
    /// Result destination; standard output when absent
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "list")]
    mode: Mode,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Wall-clock limit in seconds for the enumeration phase
    #[arg(long)]
    timeout: Option<f64>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: u32,
    /// Number of planted community pairs
    #[arg(long, default_value_t = 0)]
    planted: u32,
    /// Vertices per side of each planted pair
    #[arg(long, default_value_t = 0)]
    side: u32,
    #[arg(long, default_value_t = 0.9)]
    p_pos_in: f64,
    #[arg(long, default_value_t = 0.9)]
    p_neg_cross: f64,
    #[arg(long, default_value_t = 0.0)]
    p_noise: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    input: PathBuf,
    /// Comma-separated k values
    #[arg(long, value_delimiter = ',', required = true)]
    k: Vec<u32>,
    /// Comma-separated t values
    #[arg(long, value_delimiter = ',', required = true)]
    t: Vec<u32>,
    #[arg(long, value_enum, value_delimiter = ',', default_values = ["bape", "sanc", "sape"])]
    algos: Vec<AlgoArg>,
    /// Timed repetitions per cell (one extra warm-up run is discarded)
    #[arg(long, default_value_t = 3)]
    reps: usize,
    #[arg(long)]
    timeout: Option<f64>,
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match code {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}

fn load_graph(path: &Path) -> Result<SignedGraph> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let (g, report) = load_signed_edge_list(BufReader::new(file))
        .with_context(|| format!("loading {}", path.display()))?;
    if report.duplicate_edges + report.conflicting_pairs + report.self_loops > 0 {
        eprintln!(
            "load: dropped {} duplicate edges, {} conflicting pairs, {} self-loops",
            report.duplicate_edges, report.conflicting_pairs, report.self_loops
        );
    }
    Ok(g)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<i32> {
    let total_start = Instant::now();
    let load_start = Instant::now();
    let g = load_graph(&args.common.input)?;
    let load_time = load_start.elapsed();
    let params = Params::new(args.common.k, args.common.t)?;

    let cfg = RunConfig {
        algo: args.algo.into(),
        workers: args.workers,
        timeout: args.timeout.map(Duration::from_secs_f64),
        collect: args.mode == Mode::List,
    };
    let report = run(&g, params, &cfg);

    let body = match args.mode {
        Mode::List => format_results(&report.plexes, g.labels()),
        Mode::Count => format!("{}\n", report.count),
    };
    match &args.output {
        Some(path) => {
            let mut out = BufWriter::new(
                File::create(path).with_context(|| format!("creating {}", path.display()))?,
            );
            out.write_all(body.as_bytes())?;
            out.flush()?;
        }
        None => {
            print!("{body}");
        }
    }

    let ms = |d: Duration| d.as_secs_f64() * 1e3;
    let mut phase_times = BTreeMap::new();
    phase_times.insert("load", ms(load_time));
    phase_times.insert("vr", ms(report.vr_time));
    phase_times.insert("dr", ms(report.dr_time));
    phase_times.insert("enumerate", ms(report.enumerate_time));
    phase_times.insert("total", ms(total_start.elapsed()));
    let stats = RunStats {
        n: g.n(),
        m_pos: g.m_pos(),
        m_neg: g.m_neg(),
        vr_removed: report.vr_removed,
        dr_candidate_total: report.dr_candidate_total,
        results: report.count,
        phase_times,
        peak_memory: peak_rss_bytes(),
    };
    eprintln!("{}", serde_json::to_string(&stats)?);

    if report.timed_out {
        eprintln!(
            "error: enumeration exceeded the {}s timeout",
            args.timeout.unwrap_or(0.0)
        );
        return Ok(124);
    }
    Ok(0)
}

fn cmd_oracle(args: CommonArgs) -> Result<i32> {
    let g = load_graph(&args.input)?;
    let params = Params::new(args.k, args.t)?;
    let results = enumerate_bruteforce(&g, params)?;
    print!("{}", format_results(&results, g.labels()));
    Ok(0)
}

fn cmd_gen(args: GenArgs) -> Result<i32> {
    let spec = GenSpec {
        n: args.n,
        planted: args.planted,
        side: args.side,
        p_pos_in: args.p_pos_in,
        p_neg_cross: args.p_neg_cross,
        p_noise: args.p_noise,
        seed: args.seed,
    };
    let edges = planted_edges(&spec)?;
    let mut out = BufWriter::new(
        File::create(&args.output).with_context(|| format!("creating {}", args.output.display()))?,
    );
    out.write_all(edges_to_text(&edges).as_bytes())?;
    out.flush()?;
    Ok(0)
}

fn cmd_bench(args: BenchArgs) -> Result<i32> {
    if args.reps == 0 {
        bail!("--reps must be at least 1");
    }
    let g = load_graph(&args.input)?;
    let dataset = args
        .input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "dataset".into());
    println!("dataset,k,t,algo,run,elapsed_ms,results,vr_removed,dr_candidate_total");
    for &k in &args.k {
        for &t in &args.t {
            let Ok(params) = Params::new(k, t) else {
                eprintln!("skipping invalid cell k={k} t={t}");
                continue;
            };
            for &algo in &args.algos {
                let cfg = RunConfig {
                    algo: algo.into(),
                    workers: 1,
                    timeout: args.timeout.map(Duration::from_secs_f64),
                    collect: false,
                };
                // warm-up, excluded from the rows
                let _ = run(&g, params, &cfg);
                for rep in 1..=args.reps {
                    let start = Instant::now();
                    let report = run(&g, params, &cfg);
                    let elapsed = start.elapsed();
                    let elapsed_cell = if report.timed_out {
                        "INF".to_string()
                    } else {
                        format!("{:.3}", elapsed.as_secs_f64() * 1e3)
                    };
                    println!(
                        "{dataset},{k},{t},{},{rep},{elapsed_cell},{},{},{}",
                        Algo::from(algo).name(),
                        report.count,
                        report.vr_removed,
                        report.dr_candidate_total
                    );
                }
            }
        }
    }
    Ok(0)
}
