//! Command implementations. Each returns the report document plus the exit
//! code; I/O failures and malformed inputs surface as [`CliError`], which
//! the binary maps to exit code 2.

use crate::config::{ConfigError, RunConfig};
use crate::report::{Report, TOOL_VERSION};
use latalg::semigroup::{builtin_catalog, load_catalog, SemigroupError, SemigroupTable};
use latalg::verify::{
    self, constant_log_weight, exp_quadratic_log_weight, geometric_log_weight, radicality_probe,
    search_counterexamples, sort_verdicts, unexpected_failures, RadicalityConfig,
    RadicalityError, Verdict,
};
use latalg::weight::{Weight, WeightError};
use latalg::Rational;
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::PathBuf;

/// Default maximum order of the built-in catalog.
pub const BUILTIN_MAX_ORDER: usize = 6;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Algebra(#[from] latalg::algebra::AlgebraError),
    #[error(transparent)]
    Radicality(#[from] RadicalityError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {message}")]
    Parse { path: String, message: String },
}

/// What a command wants written where, and how to exit.
#[derive(Debug)]
pub struct CommandOutput {
    pub report_json: String,
    pub human_lines: Vec<String>,
    pub exit_code: i32,
}

fn load_tables(cfg: &RunConfig) -> Result<Vec<SemigroupTable>, CliError> {
    match &cfg.catalog {
        Some(path) => Ok(load_catalog(path)?),
        None => Ok(builtin_catalog(BUILTIN_MAX_ORDER)),
    }
}

fn load_weights(
    cfg: &RunConfig,
    tables: &[SemigroupTable],
) -> Result<Option<Vec<Weight<Rational>>>, CliError> {
    let Some(path) = &cfg.weights else {
        return Ok(None);
    };
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let map: BTreeMap<String, String> =
        serde_json::from_str(&text).map_err(|e| CliError::Parse {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
    let weights = tables
        .iter()
        .map(|t| Weight::from_label_map(&map, t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Some(weights))
}

/// Load, validate, and classify the catalog. Exit 0 iff every entry is
/// valid; invalid entries surface as [`CliError`] (exit 2) naming the entry
/// and the violating triple.
pub fn run_validate(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let tables = load_tables(cfg)?;
    let entries: Vec<verify::EntrySummary> = tables
        .iter()
        .map(|t| verify::EntrySummary {
            name: t.name().to_string(),
            order: t.order(),
            flags: t.classify(),
        })
        .collect();
    let human_lines = entries
        .iter()
        .map(|e| {
            format!(
                "{}: order {}, identity={}, cancellative={}, group={}, abelian={}",
                e.name,
                e.order,
                e.flags.has_identity,
                e.flags.is_cancellative,
                e.flags.is_group,
                e.flags.is_abelian
            )
        })
        .collect();
    let report = Report::new(cfg, entries, Vec::new());
    Ok(CommandOutput {
        report_json: report.render(),
        human_lines,
        exit_code: 0,
    })
}

fn exit_for(verdicts: &[Verdict], tables: &[SemigroupTable]) -> i32 {
    if unexpected_failures(verdicts, tables).is_empty() {
        0
    } else {
        1
    }
}

/// Run the full verifier suite. Failures on non-cancellative tables are
/// expected findings (exit 0, witnesses recorded); a failure anywhere the
/// theory guarantees a pass exits 1.
pub fn run_verify(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let tables = load_tables(cfg)?;
    let weights = load_weights(cfg, &tables)?;
    let outcome = verify::run_suite(&tables, weights.as_deref(), &cfg.suite_config())?;
    let exit_code = exit_for(&outcome.verdicts, &tables);
    let human_lines = outcome
        .verdicts
        .iter()
        .map(|v| {
            format!(
                "[{}] {} — {}",
                if v.passed { "PASS" } else { "FAIL" },
                v.theorem_id,
                v.instance
            )
        })
        .collect();
    let report = Report::new(cfg, outcome.entries, outcome.verdicts);
    Ok(CommandOutput {
        report_json: report.render(),
        human_lines,
        exit_code,
    })
}

/// Counterexample hunt: all lattice-homomorphism failures over the catalog.
pub fn run_search(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let tables = load_tables(cfg)?;
    let failures = search_counterexamples(&tables, cfg.trials, cfg.seed);
    let exit_code = exit_for(&failures, &tables);
    let human_lines = if failures.is_empty() {
        vec!["no counterexamples found".to_string()]
    } else {
        failures
            .iter()
            .map(|v| {
                format!(
                    "counterexample on {}: max deviation {}",
                    v.entry,
                    v.witness
                        .as_ref()
                        .map(|w| w.max_deviation.clone())
                        .unwrap_or_default()
                )
            })
            .collect()
    };
    let entries = tables
        .iter()
        .map(|t| verify::EntrySummary {
            name: t.name().to_string(),
            order: t.order(),
            flags: t.classify(),
        })
        .collect();
    let report = Report::new(cfg, entries, failures);
    Ok(CommandOutput {
        report_json: report.render(),
        human_lines,
        exit_code,
    })
}

/// Commutant checks for every group in the catalog within the cutoff.
pub fn run_commutant(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let tables = load_tables(cfg)?;
    let mut verdicts = Vec::new();
    for table in &tables {
        if table.classify().is_group && table.order() <= cfg.enumeration_cutoff {
            verdicts.push(
                verify::verify_commutant(table, cfg.enumeration_cutoff)
                    .expect("group within cutoff"),
            );
        }
    }
    sort_verdicts(&mut verdicts);
    let exit_code = exit_for(&verdicts, &tables);
    let human_lines = verdicts
        .iter()
        .map(|v| {
            format!(
                "[{}] commutant {} ({} checks)",
                if v.passed { "PASS" } else { "FAIL" },
                v.instance,
                v.checked
            )
        })
        .collect();
    let entries = tables
        .iter()
        .map(|t| verify::EntrySummary {
            name: t.name().to_string(),
            order: t.order(),
            flags: t.classify(),
        })
        .collect();
    let report = Report::new(cfg, entries, verdicts);
    Ok(CommandOutput {
        report_json: report.render(),
        human_lines,
        exit_code,
    })
}

/// Riesz–Kantorovich oracle equivalence sweeps.
pub fn run_rk_check(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let verdicts = vec![
        verify::rk_oracle_sweep(cfg.trials, 10, cfg.enumeration_cutoff, cfg.seed),
        verify::verify_measure_lattice(8, cfg.trials.min(100), cfg.seed),
    ];
    let exit_code = exit_for(&verdicts, &[]);
    let human_lines = verdicts
        .iter()
        .map(|v| {
            format!(
                "[{}] {} — {}",
                if v.passed { "PASS" } else { "FAIL" },
                v.theorem_id,
                v.instance
            )
        })
        .collect();
    let report = Report::new(cfg, Vec::new(), verdicts);
    Ok(CommandOutput {
        report_json: report.render(),
        human_lines,
        exit_code,
    })
}

/// Weight family for the radicality probe, in log space.
#[derive(Debug, Clone)]
pub enum WeightFamily {
    /// `ω(n) = exp(−n²)`.
    ExpQuadratic,
    /// `ω ≡ 1`.
    Constant,
    /// `ω(n) = rⁿ`.
    Geometric { ratio: f64 },
    /// JSON array of `ln ω(n)` values, `n = 0..` in file order.
    LogWeightFile(PathBuf),
}

impl WeightFamily {
    fn log_weights(&self, depth: usize) -> Result<Vec<f64>, CliError> {
        match self {
            WeightFamily::ExpQuadratic => Ok(exp_quadratic_log_weight(depth)),
            WeightFamily::Constant => Ok(constant_log_weight(depth)),
            WeightFamily::Geometric { ratio } => Ok(geometric_log_weight(*ratio, depth)),
            WeightFamily::LogWeightFile(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                let values: Vec<f64> =
                    serde_json::from_str(&text).map_err(|e| CliError::Parse {
                        path: path.display().to_string(),
                        message: e.to_string(),
                    })?;
                Ok(values)
            }
        }
    }

    fn describe(&self) -> String {
        match self {
            WeightFamily::ExpQuadratic => "exp(-n^2)".to_string(),
            WeightFamily::Constant => "constant 1".to_string(),
            WeightFamily::Geometric { ratio } => format!("geometric r={ratio}"),
            WeightFamily::LogWeightFile(path) => format!("log-weights from {}", path.display()),
        }
    }
}

#[derive(Debug, Serialize)]
struct RadicalityDocument {
    tool_version: String,
    family: String,
    depth: usize,
    radical_threshold: String,
    roots: Vec<String>,
    classification: String,
}

/// Quasi-nilpotence probe for `δ_1` in `ℓ¹(ℤ⁺, ω)` truncated at `depth`.
pub fn run_radicality(
    family: &WeightFamily,
    depth: usize,
    radical_threshold: f64,
) -> Result<CommandOutput, CliError> {
    let log_weights = family.log_weights(depth)?;
    let config = RadicalityConfig {
        radical_threshold,
        ..RadicalityConfig::default()
    };
    let report = radicality_probe(&log_weights, &config)?;
    let doc = RadicalityDocument {
        tool_version: TOOL_VERSION.to_string(),
        family: family.describe(),
        depth: report.depth,
        radical_threshold: format!("{:.16e}", radical_threshold),
        roots: report.roots.iter().map(|r| format!("{:.16e}", r)).collect(),
        classification: report.classification.to_string(),
    };
    let mut json = serde_json::to_string_pretty(&doc).expect("radicality serialization");
    json.push('\n');
    let human_lines = vec![format!(
        "{} at depth {}: {}",
        family.describe(),
        report.depth,
        report.classification
    )];
    Ok(CommandOutput {
        report_json: json,
        human_lines,
        exit_code: 0,
    })
}
