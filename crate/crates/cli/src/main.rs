use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use crown_core::harness::{any_failed, export_objects, info, parse_checks, report_json, run_suite, ExportKind, RunConfig};
use crown_core::{Caps, Error, FieldSpec};

#[derive(Parser)]
#[command(name = "crown", version, about = "Exact checks on crown graph algebras and their Loday representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks and report pass/fail per check.
    Verify {
        #[arg(long)]
        n: usize,
        /// `rational` or `fp:<p>`.
        #[arg(long, default_value = "rational")]
        field: FieldSpec,
        /// `all` or a comma-separated subset of
        /// monoid,graphs,lemma,transport,iso,noniso,functor,explore.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Write the JSON report to PATH, or to stdout when no path is given.
        #[arg(long, num_args = 0..=1, value_name = "PATH")]
        json: Option<Option<PathBuf>>,
        #[arg(long)]
        max_tensor_dim: Option<u128>,
        #[arg(long)]
        max_proj_points: Option<u128>,
        #[arg(long)]
        max_graph_size: Option<usize>,
    },
    /// Write graphs, algebras, matrices or natural transformations as JSON.
    Export {
        /// graphs, algebras, matrices or nat_trans.
        #[arg(long)]
        what: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "rational")]
        field: FieldSpec,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print construction sizes for small levels.
    Info {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

enum Failure {
    Checks,
    Config(Error),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(_) | Error::Field(_) => Failure::Config(e),
            other => Failure::Runtime(other),
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify {
            n,
            field,
            checks,
            json,
            max_tensor_dim,
            max_proj_points,
            max_graph_size,
        } => {
            let defaults = Caps::default();
            let config = RunConfig {
                n,
                field,
                checks: parse_checks(&checks)?,
                caps: Caps {
                    max_tensor_dim: max_tensor_dim.unwrap_or(defaults.max_tensor_dim),
                    max_proj_points: max_proj_points.unwrap_or(defaults.max_proj_points),
                    max_graph_size: max_graph_size.unwrap_or(defaults.max_graph_size),
                    ..defaults
                },
            };
            let reports = run_suite(&config)?;
            let doc = report_json(&config, &reports)?;
            match &json {
                Some(None) => print!("{doc}"),
                Some(Some(path)) => std::fs::write(path, &doc).map_err(|e| Failure::Runtime(e.into()))?,
                None => {}
            }
            if !matches!(json, Some(None)) {
                for r in &reports {
                    println!("{:<10} {:<8} {} ms", r.check.as_str(), format!("{:?}", r.status).to_lowercase(), r.elapsed_ms);
                }
            }
            if any_failed(&reports) {
                return Err(Failure::Checks);
            }
        }
        Command::Export { what, n, field, out } => {
            let kind: ExportKind = what.parse()?;
            export_objects(&RunConfig::new(n, field), kind, &out)?;
        }
        Command::Info { max_n } => {
            let v = info(max_n)?;
            println!("{:>3} {:>6} {:>10} {:>10} {:>10}", "n", "|W_n|", "dim Q(B)", "dim Q(C+)", "dim Q(C-)");
            for row in v.as_array().into_iter().flatten() {
                let dim = |k: &str| row[k]["algebra_dim"].as_u64().map_or("-".to_string(), |d| d.to_string());
                println!(
                    "{:>3} {:>6} {:>10} {:>10} {:>10}",
                    row["n"].as_u64().unwrap_or(0),
                    row["monoid_size"].as_u64().unwrap_or(0),
                    dim("strip"), dim("crown_plus"), dim("crown_minus")
                );
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Config(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
