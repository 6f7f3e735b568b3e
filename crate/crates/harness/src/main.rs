use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cwkit_core::circular::CircularCaps;
use cwkit_core::io::{serialize_edge_list, serialize_graph6};
use cwkit_core::report::CertificateScope;
use cwkit_harness::compute::{compute, render, ComputeOptions, Mode};
use cwkit_harness::config::{Caps, Format, Keep, Span};
use cwkit_harness::generate::{generate, GenFamily, GenParams};
use cwkit_harness::source::read_graph_file;
use cwkit_harness::sweep::write_reproducers;
use cwkit_harness::table::write_csv;
use cwkit_harness::{run_sweep, Check, Family, HarnessError, Result, SweepConfig, SweepResult};

#[derive(Parser)]
#[command(name = "cwkit", version, about = "Cutwidth, degeneracy and sparsity bounds on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print invariants of the graph(s) in a graph6 or edge-list file.
    Compute(ComputeArgs),
    /// Write a graph from a named family.
    Generate(GenerateArgs),
    /// Run a verification sweep.
    Verify(Box<VerifyArgs>),
    /// Turn a sweep result into a CSV table.
    Report(ReportArgs),
}

#[derive(Args)]
struct ComputeArgs {
    file: PathBuf,
    /// Exact cutwidth only; fail when the graph is too large.
    #[arg(long, conflicts_with = "heuristic")]
    exact: bool,
    /// Heuristic cutwidth (an upper bound) only.
    #[arg(long)]
    heuristic: bool,
    /// Fail instead of skipping when circular cutwidth is out of reach.
    #[arg(long)]
    circular: bool,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = cwkit_core::cutwidth::DEFAULT_DP_MAX_N)]
    dp_max_n: usize,
    #[arg(long, default_value_t = 20_000)]
    iterations: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(value_enum)]
    family: GenFamily,
    /// Vertex count (leaves for star, dimension for hypercube).
    #[arg(long)]
    n: Option<usize>,
    /// Part count.
    #[arg(long)]
    k: Option<usize>,
    /// Edge probability.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: PathBuf,
    /// Write an edge list instead of graph6.
    #[arg(long)]
    edge_list: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON sweep configuration; replaces the inline flags.
    #[arg(long, conflicts_with_all = ["family", "n", "k", "p", "seeds", "files"])]
    config: Option<PathBuf>,
    #[arg(long, value_enum, required_unless_present = "config")]
    family: Option<Family>,
    /// Vertex range such as `4..14`.
    #[arg(long)]
    n: Option<Span>,
    #[arg(long)]
    k: Option<Span>,
    #[arg(long, value_delimiter = ',')]
    p: Vec<f64>,
    #[arg(long)]
    seeds: Option<Span>,
    #[arg(long = "file")]
    files: Vec<PathBuf>,
    #[arg(long, value_enum, value_delimiter = ',')]
    checks: Vec<Check>,
    #[arg(long, value_parser = parse_scope)]
    certificate_scope: Option<CertificateScope>,
    #[arg(long)]
    dp_max_n: Option<usize>,
    #[arg(long)]
    brute_max_n: Option<usize>,
    #[arg(long)]
    circular_max_n: Option<usize>,
    #[arg(long)]
    circular_max_m: Option<usize>,
    #[arg(long)]
    subset_max_n: Option<usize>,
    #[arg(long)]
    heuristic_iterations: Option<usize>,
    #[arg(long)]
    no_heuristic_fallback: bool,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, value_enum)]
    keep: Option<Keep>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct ReportArgs {
    results: PathBuf,
    /// Defaults to stdout.
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn parse_scope(s: &str) -> std::result::Result<CertificateScope, String> {
    serde_json::from_value(serde_json::Value::String(s.to_string()))
        .map_err(|_| format!("unknown scope {s:?}; expected whole, core, both or none"))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))
}

fn write(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|e| HarnessError::io(path, e))
}

fn cmd_compute(a: ComputeArgs) -> Result<ExitCode> {
    let mode = match (a.exact, a.heuristic) {
        (true, _) => Mode::Exact,
        (_, true) => Mode::Heuristic,
        _ => Mode::Auto,
    };
    let opts = ComputeOptions {
        mode,
        dp_max_n: a.dp_max_n,
        heuristic_iterations: a.iterations,
        seed: a.seed,
        require_circular: a.circular,
        circular_caps: CircularCaps::default(),
    };
    let graphs = read_graph_file(&a.file)?;
    let mut all = Vec::new();
    for g in &graphs {
        match compute(g, &opts) {
            Err(HarnessError::Core(e @ cwkit_core::Error::Capacity { .. })) if mode == Mode::Exact => {
                eprintln!("error: {e}");
                eprintln!("hint: rerun with --heuristic for an upper bound");
                return Ok(ExitCode::from(2));
            }
            r => all.push(r?),
        }
    }
    if a.json {
        let text = if all.len() == 1 {
            serde_json::to_string_pretty(&all[0])
        } else {
            serde_json::to_string_pretty(&all)
        };
        println!("{}", text.expect("invariants serialize"));
    } else {
        for (i, inv) in all.iter().enumerate() {
            if all.len() > 1 {
                println!("# graph {}", i + 1);
            }
            print!("{}", render(inv));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_generate(a: GenerateArgs) -> Result<ExitCode> {
    let g = generate(a.family, &GenParams { n: a.n, k: a.k, p: a.p, seed: a.seed })?;
    let text = if a.edge_list { serialize_edge_list(&g) } else { format!("{}\n", serialize_graph6(&g)) };
    write(&a.out, text.as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

fn sweep_config(a: VerifyArgs) -> Result<SweepConfig> {
    let mut cfg = match &a.config {
        Some(path) => SweepConfig::from_json(&read(path)?)?,
        None => {
            let mut cfg = SweepConfig::new(a.family.expect("required by clap"));
            cfg.n = a.n;
            cfg.k = a.k;
            cfg.p = a.p;
            cfg.seeds = a.seeds;
            cfg.files = a.files;
            cfg
        }
    };
    if !a.checks.is_empty() {
        cfg.checks = a.checks;
    }
    let caps = Caps {
        dp_max_n: a.dp_max_n.unwrap_or(cfg.caps.dp_max_n),
        brute_max_n: a.brute_max_n.unwrap_or(cfg.caps.brute_max_n),
        circular_max_n: a.circular_max_n.unwrap_or(cfg.caps.circular_max_n),
        circular_max_m: a.circular_max_m.unwrap_or(cfg.caps.circular_max_m),
        subset_max_n: a.subset_max_n.unwrap_or(cfg.caps.subset_max_n),
    };
    cfg.caps = caps;
    if let Some(s) = a.certificate_scope {
        cfg.certificate_scope = s;
    }
    if let Some(i) = a.heuristic_iterations {
        cfg.heuristic_iterations = i;
    }
    if a.no_heuristic_fallback {
        cfg.heuristic_fallback = false;
    }
    if let Some(f) = a.format {
        cfg.format = f;
    }
    if let Some(k) = a.keep {
        cfg.keep = k;
    }
    if a.output.is_some() {
        cfg.output = a.output;
    }
    if let Some(t) = a.threads {
        cfg.threads = t;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn reproducer_dir(output: &Path) -> PathBuf {
    let mut name = output.file_stem().unwrap_or_default().to_os_string();
    name.push(".violations");
    output.with_file_name(name)
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode> {
    let cfg = sweep_config(a)?;
    let mut result = run_sweep(&cfg)?;
    let reproducers = match &cfg.output {
        Some(out) => write_reproducers(&mut result, &reproducer_dir(out))?,
        None => Vec::new(),
    };
    if let Some(out) = &cfg.output {
        match cfg.format {
            Format::Json => write(out, result.to_json().as_bytes())?,
            Format::Csv => {
                let file = fs::File::create(out).map_err(|e| HarnessError::io(out, e))?;
                write_csv(&result, io::BufWriter::new(file))?;
            }
        }
    }

    let s = &result.summary;
    let mut stdout = io::stdout().lock();
    let _ = writeln!(stdout, "graphs processed: {}", s.graphs_processed);
    let _ = writeln!(stdout, "violations: {}", s.violations.len());
    for (what, count) in &s.violation_counts {
        let _ = writeln!(stdout, "  {what}: {count}");
    }
    let _ = writeln!(stdout, "tight cases: {}", s.tight_cases);
    let _ = writeln!(stdout, "capacity skips: {}", s.capacity_skips.len());
    if let Some(out) = &cfg.output {
        let _ = writeln!(stdout, "results: {}", out.display());
    }
    if !reproducers.is_empty() {
        let _ = writeln!(stdout, "reproducers: {}", reproducer_dir(cfg.output.as_ref().expect("set")).display());
        for p in reproducers.iter().take(10) {
            let _ = writeln!(stdout, "  {}", p.display());
        }
        if reproducers.len() > 10 {
            let _ = writeln!(stdout, "  ... and {} more", reproducers.len() - 10);
        }
    } else {
        for v in s.violations.iter().take(10) {
            let _ = writeln!(stdout, "  {} {} [{}]: {}", v.id, v.graph6, v.what, v.detail);
        }
    }
    Ok(if result.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_report(a: ReportArgs) -> Result<ExitCode> {
    let result = SweepResult::from_json(&read(&a.results)?)?;
    match a.csv {
        Some(path) => {
            let file = fs::File::create(&path).map_err(|e| HarnessError::io(&path, e))?;
            write_csv(&result, io::BufWriter::new(file))?;
        }
        None => write_csv(&result, io::stdout().lock())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Generate(a) => cmd_generate(a),
        Command::Verify(a) => cmd_verify(*a),
        Command::Report(a) => cmd_report(a),
    };
    outcome.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}
