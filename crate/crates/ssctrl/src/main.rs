//! Thin command-line front end over the library.
//!
//! Exit codes for `analyze`: 0 controllable, 1 not controllable, 2 input
//! error, 3 internal-consistency alarm (numeric oracle disagrees with the
//! graph verdict).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand};

use ssctrl::criteria::{decide, g_rank};
use ssctrl::generate::gen_random;
use ssctrl::graph::{colored_union_graph, export_dot, subsystem_graph, union_graph};
use ssctrl::io::{parse_system, render_system};
use ssctrl::oracle::{oracle_dims};
use ssctrl::report::{AnalysisReport, OracleReport};
use ssctrl::system::SwitchedSystem;

#[derive(Parser)]
#[command(
    name = "ssctrl",
    about = "Structural controllability of switched linear systems from sparsity patterns",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Debug)]
enum GraphKind {
    Union,
    Colored,
    Subsystem(usize),
}

impl FromStr for GraphKind {
    type Err = String;

    fn from_str(s: &str) -> Result<GraphKind, String> {
        match s {
            "union" => Ok(GraphKind::Union),
            "colored" => Ok(GraphKind::Colored),
            other => match other.strip_prefix("subsystem:") {
                Some(idx) => idx
                    .parse()
                    .map(GraphKind::Subsystem)
                    .map_err(|_| format!("invalid subsystem index {idx:?}")),
                None => Err(format!(
                    "expected union, colored, or subsystem:<i>, got {other:?}"
                )),
            },
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide structural controllability of a system file and print a report.
    Analyze {
        file: PathBuf,
        /// Emit the machine-readable JSON report instead of text.
        #[arg(long)]
        json: bool,
        /// Cross-check the verdict with N randomized numeric trials.
        #[arg(long, value_name = "N")]
        oracle: Option<usize>,
        /// Seed for the numeric trials.
        #[arg(long, value_name = "K", default_value_t = 0)]
        seed: u64,
    },
    /// Write a Graphviz DOT rendering of one of the system's graphs.
    ExportDot {
        file: PathBuf,
        /// Which graph: union, colored, or subsystem:<i> (1-based).
        #[arg(long)]
        graph: GraphKind,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Generate a random system file with the given entry density.
    GenRandom {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        /// Probability that each candidate entry is free, in [0, 1].
        #[arg(long, value_parser = parse_density)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Print the generic rank of the sum and stacked patterns.
    Gyrank { file: PathBuf },
}

fn parse_density(s: &str) -> Result<f64, String> {
    let d: f64 = s.parse().map_err(|_| format!("invalid density {s:?}"))?;
    if (0.0..=1.0).contains(&d) {
        Ok(d)
    } else {
        Err("density must lie in [0, 1]".into())
    }
}

fn load(file: &PathBuf) -> Result<SwitchedSystem, String> {
    let text = fs::read_to_string(file)
        .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    parse_system(&text).map_err(|e| format!("{}: {e}", file.display()))
}

fn write_out(out: Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(&path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run() -> Result<u8, String> {
    match Cli::parse().command {
        Command::Analyze {
            file,
            json,
            oracle,
            seed,
        } => {
            let sys = load(&file)?;
            let start = Instant::now();
            let verdict = decide(&sys);
            let elapsed_us = start.elapsed().as_micros() as u64;
            let oracle_report = oracle.map(|trials| {
                let dims = oracle_dims(&sys, trials, seed);
                let controllable = dims.iter().any(|&d| d == sys.n());
                OracleReport {
                    trials,
                    seed,
                    dims,
                    controllable,
                    agrees: controllable == verdict.controllable,
                }
            });
            let report = AnalysisReport::new(sys.n(), &verdict, oracle_report, elapsed_us);
            if json {
                print!("{}", report.to_json());
            } else {
                println!("{report}");
            }
            Ok(report.exit_code())
        }
        Command::ExportDot { file, graph, out } => {
            let sys = load(&file)?;
            let g = match graph {
                GraphKind::Union => union_graph(&sys),
                GraphKind::Colored => colored_union_graph(&sys),
                GraphKind::Subsystem(i) => {
                    subsystem_graph(&sys, i).map_err(|e| e.to_string())?
                }
            };
            write_out(out, &export_dot(&g))?;
            Ok(0)
        }
        Command::GenRandom {
            n,
            r,
            m,
            density,
            seed,
            out,
        } => {
            let sys = gen_random(n, r, m, density, seed).map_err(|e| e.to_string())?;
            write_out(out, &render_system(&sys))?;
            Ok(0)
        }
        Command::Gyrank { file } => {
            let sys = load(&file)?;
            let sum = sys.sum_pattern();
            let stacked = sys.stacked_pattern();
            println!(
                "sum pattern     [A_1+...+A_m | B_1+...+B_m]  ({}x{}): g-rank {}",
                sum.rows(),
                sum.cols(),
                g_rank(&sum)
            );
            println!(
                "stacked pattern [A_1,...,A_m | B_1,...,B_m]  ({}x{}): g-rank {} (full = {})",
                stacked.rows(),
                stacked.cols(),
                g_rank(&stacked),
                sys.n()
            );
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
