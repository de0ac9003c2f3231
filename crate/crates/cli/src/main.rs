use bigraph_entropy::constructions::b_nmy;
use bigraph_entropy::indices::{builtin_indices, ti_g};
use bigraph_entropy::kernel::{entropy, DegreeSequence};
use bigraph_entropy::search::{brute_force_extremal, fast_extremal, summarize, sweep};
use bigraph_entropy::tableau::YoungTableau;
use bigraph_entropy::verify::{run_suite, SUITES};
use bigraph_entropy::Error;
use bigraph_entropy_cli::csvio;
use clap::{Args, Parser, Subcommand};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "bigraph-entropy", version, about = "Degree-based entropy of bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute h and the entropy of a tableau or a degree sequence.
    Entropy(EntropyArgs),
    /// Find the entropy-maximal shape for a given order and size.
    Extremal {
        /// Number of vertices.
        #[arg(long)]
        n: u64,
        /// Number of edges.
        #[arg(long)]
        m: u64,
        /// Cross-check against brute-force enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Enumerate extremal candidates for all orders up to a bound (CSV).
    Sweep {
        /// Largest order to include.
        #[arg(long = "max-n")]
        max_n: u64,
        /// Write CSV here instead of stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Run an exhaustive verification suite.
    Verify {
        /// Suite name.
        #[arg(long, value_parser = SUITES.to_vec())]
        suite: String,
        /// Size limit; each suite has a sensible default.
        #[arg(long)]
        limit: Option<u64>,
    },
}

#[derive(Args)]
struct EntropyArgs {
    /// Tableau row lengths, e.g. "6,6,5,5".
    #[arg(conflicts_with_all = ["degrees", "m"])]
    tableau: Option<String>,
    /// Comma-separated degree sequence (requires --m).
    #[arg(long, requires = "m")]
    degrees: Option<String>,
    /// Number of edges for the degree sequence.
    #[arg(long, requires = "degrees")]
    m: Option<u64>,
    /// Also evaluate a topological index on the tableau.
    #[arg(long)]
    index: Option<String>,
}

fn parse_degrees(text: &str) -> Result<DegreeSequence, Error> {
    let mut degrees = Vec::new();
    for (i, field) in text.split(',').enumerate() {
        let d = field.trim().parse::<u64>().map_err(|_| Error::Parse {
            position: i + 1,
            message: format!("bad degree {field:?}"),
        })?;
        degrees.push(d);
    }
    Ok(DegreeSequence::new(degrees))
}

fn cmd_entropy(args: EntropyArgs) -> Result<(), Error> {
    if let Some(text) = &args.tableau {
        let t: YoungTableau = text.parse()?;
        let d = t.degrees();
        let m = t.cell_count();
        println!("tableau   {t}");
        println!("conjugate {}", t.conjugate());
        println!("degrees   {d}");
        println!("m         {m}");
        println!("h         {}", t.h());
        println!("entropy   {}", entropy(&d, m)?);
        if let Some(id) = &args.index {
            let registry = builtin_indices();
            let g = registry.get(id)?;
            println!("{:<9} {}", g.id, ti_g(&t, g));
        }
        return Ok(());
    }
    if let Some(text) = &args.degrees {
        if args.index.is_some() {
            return Err(Error::Domain("--index needs a tableau, not raw degrees".into()));
        }
        let d = parse_degrees(text)?;
        let m = args.m.expect("clap enforces --m with --degrees");
        println!("degrees   {d}");
        println!("m         {m}");
        println!("h         {}", d.h());
        println!("entropy   {}", entropy(&d, m)?);
        return Ok(());
    }
    Err(Error::Domain("give a tableau literal or --degrees with --m".into()))
}

fn cmd_extremal(n: u64, m: u64, oracle: bool) -> Result<(), Error> {
    let (winner, records) = fast_extremal(n, m)?;
    let shape = b_nmy(Some(n), m, winner.y)?;
    println!("winner    B({n},{m},{}) = {}", winner.y, shape.tableau());
    println!("q={} x={} r_low={} r_high={}", winner.q, winner.x, winner.r_low, winner.r_high);
    println!("h         {}", winner.h);
    println!("entropy   {}", (2.0 * m as f64).ln() - winner.h / (2.0 * m as f64));
    println!("candidates {}", records.len());
    if oracle {
        let (brute_h, winners) = brute_force_extremal(m, Some(n))?;
        let tol = 1e-9 * brute_h.abs().max(1.0);
        if (brute_h - winner.h).abs() > tol {
            eprintln!("oracle disagrees: brute-force h = {brute_h}");
            for t in winners {
                eprintln!("  brute-force maximizer: {t}");
            }
            return Err(Error::Inconsistent("fast scan disagrees with brute force".into()));
        }
        println!("oracle    agrees ({} maximizer(s))", winners.len());
    }
    Ok(())
}

fn cmd_sweep(max_n: u64, out: Option<std::path::PathBuf>) -> Result<(), Error> {
    let records = sweep(max_n);
    let summary = summarize(&records);
    match out {
        Some(path) => {
            let file = File::create(&path)
                .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            csvio::write_csv(&mut w, &records)
                .and_then(|_| w.flush())
                .map_err(|e| Error::Domain(format!("write failed: {e}")))?;
            println!("{} records written to {}", records.len(), path.display());
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            csvio::write_csv(&mut w, &records)
                .and_then(|_| w.flush())
                .map_err(|e| Error::Domain(format!("write failed: {e}")))?;
        }
    }
    let t = summary.per_record;
    eprintln!(
        "extremal non-rectangles: both_min={} only_r_low={} only_r_high={} neither={}",
        t.both_min, t.only_r_low, t.only_r_high, t.neither
    );
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Entropy(args) => cmd_entropy(args).map(|_| ExitCode::SUCCESS),
        Command::Extremal { n, m, oracle } => cmd_extremal(n, m, oracle).map(|_| ExitCode::SUCCESS),
        Command::Sweep { max_n, out } => cmd_sweep(max_n, out).map(|_| ExitCode::SUCCESS),
        Command::Verify { suite, limit } => {
            let report = run_suite(&suite, limit)?;
            println!("{report}");
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("SWEEP_THREADS") {
        match threads.parse::<usize>() {
            Ok(t) if t >= 1 => {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build_global()
                    .expect("thread pool is configured once, before first use");
            }
            _ => {
                eprintln!("error: SWEEP_THREADS must be a positive integer, got {threads:?}");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. } | Error::Domain(_) | Error::UnknownIndex(_) => ExitCode::from(2),
                Error::Infeasible(_) => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}
