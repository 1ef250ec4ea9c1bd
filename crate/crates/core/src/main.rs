use std::path::PathBuf;
use std::process::ExitCode;
use std::thread;
use std::time::Duration;

use clap::Parser;

use cise::graph::Format;
use cise::harness::{self, Output};
use cise::{Algorithm, Backend, Error, RunConfig, RunReport};

/// Enumerate all connected induced subgraphs of order k.
#[derive(Parser, Debug)]
#[command(name = "cise", version)]
struct Cli {
    /// Graph file (edge list or MatrixMarket).
    #[arg(long)]
    input: PathBuf,

    /// Input format; `.mtx` files default to MatrixMarket, anything else to
    /// an edge list.
    #[arg(long)]
    format: Option<Format>,

    /// simple, simple-forward, vsimple, topdown or oracle.
    #[arg(long = "algo", default_value = "topdown")]
    algorithm: Algorithm,

    /// Adjacency representation for topdown: list or bitmatrix.
    #[arg(long, default_value = "list")]
    backend: Backend,

    /// Order of the subgraphs.
    #[arg(short = 'k')]
    k: usize,

    /// Only count; print nothing but the report.
    #[arg(long, conflicts_with = "output")]
    count_only: bool,

    /// Write one subgraph per line to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,

    /// Stop after this many seconds and report a partial count.
    #[arg(long)]
    timeout: Option<f64>,

    /// Run these algorithms and check that their outputs agree.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["count_only", "output"])]
    compare: Vec<Algorithm>,

    /// Verify state restoration and invariants at every node (slow).
    #[arg(long)]
    check: bool,
}

const EXIT_FAILURE: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

// Top-down recursion is as deep as n - k.
const STACK_SIZE: usize = 1 << 30;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let worker = thread::Builder::new().stack_size(STACK_SIZE).spawn(move || run(cli));
    match worker.map(|h| h.join()) {
        Ok(Ok(code)) => code,
        _ => {
            eprintln!("cise: enumeration thread failed");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}

fn run(cli: Cli) -> ExitCode {
    let config = match build_config(&cli) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("cise: {msg}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    if !cli.compare.is_empty() {
        return compare(&cli, &config);
    }

    let g = match config.load() {
        Ok(g) => g,
        Err(e) => {
            eprintln!("cise: {}: {e}", cli.input.display());
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    match harness::run_loaded(&g, &config) {
        Ok(outcome) => {
            let r = &outcome.report;
            if config.output == Output::Stdout {
                eprintln!("{r}");
            } else {
                println!("{r}");
            }
            eprintln!("{} (n={}, m={})", r.summary(), g.n(), g.m());
            finish_code(r)
        }
        Err(e) => fail(&e),
    }
}

fn build_config(cli: &Cli) -> Result<RunConfig, String> {
    let format = cli.format.unwrap_or_else(|| Format::from_path(&cli.input));
    let mut config = RunConfig::new(&cli.input, format, cli.algorithm, cli.k);
    config.backend = cli.backend;
    config.output = match (&cli.output, cli.count_only) {
        (Some(path), _) => Output::File(path.clone()),
        (None, true) => Output::Count,
        (None, false) => Output::Stdout,
    };
    if let Some(secs) = cli.timeout {
        config.timeout = Some(Duration::try_from_secs_f64(secs).map_err(|_| format!("invalid timeout {secs}"))?);
    }
    if cli.check {
        config.options.check_restore = true;
    }
    Ok(config)
}

fn compare(cli: &Cli, base: &RunConfig) -> ExitCode {
    let configs: Vec<RunConfig> =
        cli.compare.iter().map(|&algorithm| RunConfig { algorithm, output: Output::Collect, ..base.clone() }).collect();
    match harness::compare_runs(&configs) {
        Ok(cmp) => {
            for r in &cmp.reports {
                println!("{r}");
            }
            if let Some(r) = cmp.reports.iter().find(|r| r.timed_out) {
                eprintln!("cise: {} timed out, outputs not comparable", r.algorithm);
                return ExitCode::from(EXIT_TIMEOUT);
            }
            if cmp.equal() {
                println!("compare=equal sets={}", cmp.reference.len());
                ExitCode::SUCCESS
            } else {
                let names: Vec<&str> = cmp.mismatches.iter().map(|a| a.name()).collect();
                println!("compare=mismatch algos={}", names.join(","));
                ExitCode::from(EXIT_FAILURE)
            }
        }
        Err(e) => fail(&e),
    }
}

fn finish_code(r: &RunReport) -> ExitCode {
    if r.timed_out {
        ExitCode::from(EXIT_TIMEOUT)
    } else {
        ExitCode::SUCCESS
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("cise: {e}");
    let code = match e {
        Error::Io(_) | Error::DeletableBound { .. } | Error::NothingToRestore | Error::IdentityFailed { .. } => {
            EXIT_FAILURE
        }
        _ => EXIT_CONFIG,
    };
    ExitCode::from(code)
}
