//! `zariski`: seeded experiments over the zariski-core algorithms.
//!
//! Every subcommand writes one report (JSON or a plain table) and exits 0
//! when all cases pass, 1 when some case fails, and 2 on usage, input or
//! size-guard errors.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use zariski_core::random::{rng, PairShape};
use zariski_core::FinPerm;

use commands::{bounds, parse_perm, CliError, CliResult, NormalizeParams, SeparateParams};
use report::{Format, Report, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "zariski", version, about = "Seeded experiments on Zariski-type topologies")]
struct Cli {
    /// Seed for the ChaCha8 generator.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Leave wall time out of the report.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Shape {
    /// Maximum number of rows of a random pair.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    rows: u32,
    /// Maximum degree of a random row.
    #[arg(long, default_value_t = 3)]
    max_degree: u32,
    /// Random permutations move points of {0, …, support-1}.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..=64))]
    support: u32,
}

impl Shape {
    fn pair_shape(self) -> PairShape {
        PairShape { max_rows: self.rows as usize, max_degree: self.max_degree as usize, support: self.support as usize }
    }

    fn echo(self) -> Vec<(&'static str, serde_json::Value)> {
        vec![("rows", json!(self.rows)), ("max_degree", json!(self.max_degree)), ("support", json!(self.support))]
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normalize a matrix pair and check membership agreement.
    Normalize {
        /// MatrixPair JSON file.
        #[arg(conflicts_with = "random", required_unless_present = "random")]
        input: Option<PathBuf>,
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        cases: u64,
        /// Random evaluation points per pair.
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        /// Non-identity permutation used by the adjust steps, as JSON pairs.
        #[arg(long, value_parser = parse_perm)]
        adjuster: Option<FinPerm>,
        #[command(flatten)]
        shape: Shape,
    },
    /// Construct an element of one basic open set, or of two at once.
    Witness {
        /// One or two MatrixPair JSON files.
        #[arg(num_args = 1..=2, conflicts_with = "random", required_unless_present = "random")]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        cases: u64,
        #[arg(long, value_parser = parse_perm)]
        adjuster: Option<FinPerm>,
        #[command(flatten)]
        shape: Shape,
    },
    /// Construct a common element of two basic open sets.
    Intersect {
        /// Two MatrixPair JSON files.
        #[arg(num_args = 2, conflicts_with = "random", required_unless_present = "random")]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        cases: u64,
        #[arg(long, value_parser = parse_perm)]
        adjuster: Option<FinPerm>,
        #[command(flatten)]
        shape: Shape,
    },
    /// Solution sets of a·xᵖ = 1 on the test sets T_m.
    Separate {
        #[arg(long, default_value_t = 2)]
        m_min: usize,
        #[arg(long, default_value_t = 5)]
        m_max: usize,
        /// Random coefficients per (m, p).
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Largest generator index searched.
        #[arg(long = "bound-N", default_value_t = 200)]
        bound_n: usize,
    },
    /// Two-point stabilizers and the decomposition in Sym(X).
    Symcheck {
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u32).range(2..=64))]
        support: u32,
    },
    /// Exhaustive families and the reduction check on small groups.
    FiniteCheck {
        /// Builtin group (repeatable); all builtins when absent.
        #[arg(long)]
        group: Vec<String>,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
}

fn default_adjuster(a: Option<FinPerm>) -> FinPerm {
    a.unwrap_or_else(|| FinPerm::transposition(0, 1))
}

fn run(cli: &Cli) -> CliResult<Report> {
    let mut rng = rng(cli.seed);
    let config = |b: Vec<(&str, serde_json::Value)>| RunConfig { seed: cli.seed, format: cli.format, bounds: bounds(&b) };
    let report = match &cli.command {
        Command::Normalize { input, random: _, cases, samples, adjuster, shape } => {
            let adjuster = default_adjuster(adjuster.clone());
            let mut echo = shape.echo();
            echo.extend([("samples", json!(samples)), ("adjuster", json!(adjuster))]);
            match input {
                Some(p) => echo.push(("input", json!(p))),
                None => echo.push(("cases", json!(cases))),
            }
            let mut report = Report::new("normalize", config(echo));
            let params = NormalizeParams { shape: shape.pair_shape(), samples: *samples as usize, adjuster };
            commands::normalize(&mut report, input.as_deref(), *cases as usize, &params, &mut rng)?;
            report
        }
        Command::Witness { inputs, random: _, cases, adjuster, shape } | Command::Intersect { inputs, random: _, cases, adjuster, shape } => {
            let name = if matches!(cli.command, Command::Witness { .. }) { "witness" } else { "intersect" };
            let adjuster = default_adjuster(adjuster.clone());
            let mut echo = shape.echo();
            echo.push(("adjuster", json!(adjuster)));
            if inputs.is_empty() {
                echo.push(("cases", json!(cases)));
            } else {
                echo.push(("inputs", json!(inputs)));
            }
            let mut report = Report::new(name, config(echo));
            if inputs.is_empty() {
                let sets = if name == "witness" { 1 } else { 2 };
                commands::witness_random(&mut report, sets, *cases as usize, shape.pair_shape(), &mut rng)?;
            } else {
                commands::witness_files(&mut report, inputs, &adjuster)?;
            }
            report
        }
        Command::Separate { m_min, m_max, samples, bound_n } => {
            let params = SeparateParams { m_min: *m_min, m_max: *m_max, samples: *samples, bound_n: *bound_n };
            let mut report = Report::new(
                "separate",
                config(vec![
                    ("m_min", json!(m_min)),
                    ("m_max", json!(m_max)),
                    ("samples", json!(samples)),
                    ("bound_N", json!(bound_n)),
                ]),
            );
            commands::separate(&mut report, &params, &mut rng)?;
            report
        }
        Command::Symcheck { samples, support } => {
            let mut report = Report::new("symcheck", config(vec![("samples", json!(samples)), ("support", json!(support))]));
            commands::symcheck(&mut report, *samples, *support as usize, &mut rng)?;
            report
        }
        Command::FiniteCheck { group, max_degree } => {
            let mut report =
                Report::new("finite-check", config(vec![("groups", json!(group)), ("max_degree", json!(max_degree))]));
            commands::finite_check(&mut report, group, *max_degree)?;
            report
        }
    };
    Ok(report)
}

fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli).and_then(|mut report| {
        if !cli.no_timing {
            report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
        }
        emit(&cli, &report.render())?;
        Ok(report.all_passed())
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
