use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use klein_core::geproci;
use klein_core::report::{self, Options, Section};
use klein_core::sampling;

/// Exact verification of the Klein configuration of 60 points in P^3.
#[derive(Parser)]
#[command(name = "klein", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the certificate suites and write a JSONL report.
    Verify {
        /// Comma-separated sections (default: all).
        #[arg(long, value_delimiter = ',')]
        sections: Vec<Section>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Report file (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record wall time per claim.
        #[arg(long)]
        timings: bool,
    },
    /// Write the 60 points in the point-set format.
    Dump {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the w = 0 section as SVG.
    Figure {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search a point set for a complete-intersection certificate.
    CheckGeproci {
        file: PathBuf,
        /// Number of seeded centers each certificate must pass at.
        #[arg(long, default_value_t = 3)]
        seeds: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Restrict to one type `d,m`: a degree-d curve and m lines.
        #[arg(long = "type", value_delimiter = ',', num_args = 1)]
        ci_type: Vec<usize>,
    },
    /// Decide whether a point set is a grid.
    CheckGrid { file: PathBuf },
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().lock().write_all(text.as_bytes()).context("writing to standard output"),
    }
}

fn verify(sections: Vec<Section>, seed: u64, out: Option<PathBuf>, timings: bool) -> Result<ExitCode> {
    let sections = if sections.is_empty() { Section::ALL.to_vec() } else { sections };
    let report = report::run_verification(&sections, seed, Options { timings });
    write_output(out.as_deref(), &report.to_jsonl())?;
    let failed = report.failed();
    for c in &failed {
        eprintln!("FAIL {}: expected {}, computed {}", c.id, c.expected, c.computed);
    }
    eprintln!("{} claims, {} failed", report.claims.len(), failed.len());
    Ok(if failed.is_empty() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn check_geproci(file: &Path, seeds: u64, seed: u64, ci_type: &[usize]) -> Result<ExitCode> {
    let points = report::load_pointset(file)?;
    let types = match ci_type {
        [] => geproci::candidate_types(points.len()),
        &[d, m] => vec![(d as u32, m)],
        _ => bail!("--type expects two numbers, d,m"),
    };
    if seeds == 0 {
        bail!("--seeds must be positive");
    }
    let base = sampling::suite_seed(seed, "check-geproci");
    let seeds: Vec<u64> = (0..seeds).map(|k| sampling::stream_seed(base, k)).collect();
    println!("{} points", points.len());
    match geproci::find_geproci(&points, &types, &seeds)? {
        Some(found) => {
            println!(
                "complete intersection of type ({},{}) at {} seeds",
                found.curve_degree,
                found.cover.len(),
                seeds.len()
            );
            for set in &found.cover {
                let labels: Vec<String> = set.points.iter().map(|p| (p + 1).to_string()).collect();
                println!("line through points {}", labels.join(" "));
            }
            for c in &found.certificates {
                println!("seed {} center {} attempts {}", c.seed, c.center, c.attempts);
            }
            Ok(ExitCode::SUCCESS)
        }
        None => {
            let tried: Vec<String> = types.iter().map(|(d, m)| format!("({d},{m})")).collect();
            println!("no certificate found for types {}", tried.join(" "));
            Ok(ExitCode::FAILURE)
        }
    }
}

fn check_grid(file: &Path) -> Result<ExitCode> {
    let points = report::load_pointset(file)?;
    println!("{} points", points.len());
    match geproci::grid_check(&points) {
        Some(g) => {
            println!("({},{})-grid", g.a, g.b);
            for (name, ruling) in ["first", "second"].iter().zip(&g.rulings) {
                for set in ruling {
                    let labels: Vec<String> = set.points.iter().map(|p| (p + 1).to_string()).collect();
                    println!("{name} ruling: {}", labels.join(" "));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("not a grid");
            Ok(ExitCode::FAILURE)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify { sections, seed, out, timings } => verify(sections, seed, out, timings),
        Command::Dump { out } => {
            write_output(out.as_deref(), &report::dump_configuration()).map(|()| ExitCode::SUCCESS)
        }
        Command::Figure { out } => write_output(out.as_deref(), &report::render_figure()).map(|()| ExitCode::SUCCESS),
        Command::CheckGeproci { file, seeds, seed, ci_type } => check_geproci(&file, seeds, seed, &ci_type),
        Command::CheckGrid { file } => check_grid(&file),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
