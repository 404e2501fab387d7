//! Command-line frontend.
//!
//! Exit codes: 0 on success (expected counterexamples included), 1 when a
//! theorem the theory guarantees fails, 2 on usage or ingestion errors.

// Error values exist only on the exit path of a one-shot binary.
#![allow(clippy::result_large_err)]

use clap::{Args, Parser, Subcommand};
use latalg_cli::config::{PartialConfig, RunConfig};
use latalg_cli::run::{
    run_commutant, run_radicality, run_rk_check, run_search, run_validate, run_verify,
    CommandOutput, WeightFamily,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "latalg",
    version,
    about = "Validates finite semigroup catalogs and machine-checks lattice properties of their convolution algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct CommonArgs {
    /// Catalog JSON file (defaults to the built-in catalog).
    #[arg(long)]
    catalog: Option<PathBuf>,
    /// Weight JSON file: map from element label to positive decimal string.
    #[arg(long)]
    weights: Option<PathBuf>,
    /// Seed for all sampled checks.
    #[arg(long)]
    seed: Option<u64>,
    /// Samples per check.
    #[arg(long)]
    trials: Option<usize>,
    /// Dimension cutoff for 2^n enumeration oracles (4..=20).
    #[arg(long)]
    cutoff: Option<usize>,
    /// ℓᵖ exponents, comma separated.
    #[arg(long = "p", value_delimiter = ',')]
    p_values: Option<Vec<f64>>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON config file; flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Load, validate, and classify a catalog.
    Validate(CommonArgs),
    /// Run the full theorem-verifier suite over a catalog.
    Verify(CommonArgs),
    /// Probe quasi-nilpotence of a weight sequence on truncated ℤ⁺.
    Radicality {
        /// Weight family: exp-quadratic, constant, or geometric.
        #[arg(long, default_value = "exp-quadratic")]
        family: String,
        /// Ratio for the geometric family.
        #[arg(long)]
        ratio: Option<f64>,
        /// JSON file with ln ω(n) values (overrides --family).
        #[arg(long)]
        log_weights: Option<PathBuf>,
        /// Truncation depth N.
        #[arg(long, default_value_t = 30)]
        depth: usize,
        /// Radical classification threshold for ω(n)^{1/n} at n = N.
        #[arg(long, default_value_t = 1e-3)]
        radical_threshold: f64,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Commutant dimension and closure checks for catalog groups.
    Commutant(CommonArgs),
    /// Riesz–Kantorovich and measure-lattice oracle equivalence sweeps.
    RkCheck(CommonArgs),
    /// Hunt for lattice-homomorphism counterexamples across a catalog.
    Search(CommonArgs),
}

fn resolve_config(args: CommonArgs) -> Result<RunConfig, latalg_cli::CliError> {
    let file = match &args.config {
        Some(path) => Some(PartialConfig::from_file(path)?),
        None => None,
    };
    let flags = PartialConfig {
        catalog: args.catalog,
        weights: args.weights,
        seed: args.seed,
        trials: args.trials,
        cutoff: args.cutoff,
        p_values: args.p_values,
        out: args.out,
    };
    Ok(RunConfig::resolve(file, flags)?)
}

fn emit(out_path: Option<&PathBuf>, output: CommandOutput) -> ExitCode {
    match out_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &output.report_json) {
                eprintln!("error: cannot write report to {}: {e}", path.display());
                return ExitCode::from(2);
            }
            for line in &output.human_lines {
                println!("{line}");
            }
        }
        None => {
            for line in &output.human_lines {
                eprintln!("{line}");
            }
            print!("{}", output.report_json);
        }
    }
    ExitCode::from(output.exit_code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Validate(args) => resolve_config(args).and_then(|cfg| {
            run_validate(&cfg).map(|out| (cfg.out.clone(), out))
        }),
        Command::Verify(args) => resolve_config(args).and_then(|cfg| {
            run_verify(&cfg).map(|out| (cfg.out.clone(), out))
        }),
        Command::Commutant(args) => resolve_config(args).and_then(|cfg| {
            run_commutant(&cfg).map(|out| (cfg.out.clone(), out))
        }),
        Command::RkCheck(args) => resolve_config(args).and_then(|cfg| {
            run_rk_check(&cfg).map(|out| (cfg.out.clone(), out))
        }),
        Command::Search(args) => resolve_config(args).and_then(|cfg| {
            run_search(&cfg).map(|out| (cfg.out.clone(), out))
        }),
        Command::Radicality {
            family,
            ratio,
            log_weights,
            depth,
            radical_threshold,
            out,
        } => {
            let family = match (log_weights, family.as_str()) {
                (Some(path), _) => Ok(WeightFamily::LogWeightFile(path)),
                (None, "exp-quadratic") => Ok(WeightFamily::ExpQuadratic),
                (None, "constant") => Ok(WeightFamily::Constant),
                (None, "geometric") => match ratio {
                    Some(r) if r > 0.0 => Ok(WeightFamily::Geometric { ratio: r }),
                    _ => Err("the geometric family needs --ratio > 0".to_string()),
                },
                (None, other) => Err(format!(
                    "unknown weight family {other:?} (expected exp-quadratic, constant, or geometric)"
                )),
            };
            match family {
                Ok(family) => run_radicality(&family, depth, radical_threshold)
                    .map(|o| (out, o)),
                Err(message) => {
                    eprintln!("error: {message}");
                    return ExitCode::from(2);
                }
            }
        }
    };
    match result {
        Ok((out_path, output)) => emit(out_path.as_ref(), output),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
