//! Run configuration with layered precedence: defaults, then a JSON config
//! file, then command-line flags. The effective configuration is echoed in
//! every report.

use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_TRIALS: usize = 200;
pub const DEFAULT_CUTOFF: usize = 12;
pub const DEFAULT_P_VALUES: [f64; 3] = [1.0, 2.0, 3.0];

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config file {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse config file {path}: {message}")]
    Parse { path: String, message: String },
    #[error("trials must be ≥ 1")]
    BadTrials,
    #[error("enumeration cutoff must lie in [4, 20], got {got}")]
    BadCutoff { got: usize },
    #[error("p values must all be ≥ 1, got {got}")]
    BadExponent { got: f64 },
}

/// Fields a config file or flag set may specify; `None` means "inherit".
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartialConfig {
    pub catalog: Option<PathBuf>,
    pub weights: Option<PathBuf>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub cutoff: Option<usize>,
    pub p_values: Option<Vec<f64>>,
    pub out: Option<PathBuf>,
}

impl PartialConfig {
    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|e| ConfigError::Parse {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    }
}

/// Fully resolved run configuration.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub catalog: Option<PathBuf>,
    pub weights: Option<PathBuf>,
    pub seed: u64,
    pub trials: usize,
    pub enumeration_cutoff: usize,
    pub p_values: Vec<f64>,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            catalog: None,
            weights: None,
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            enumeration_cutoff: DEFAULT_CUTOFF,
            p_values: DEFAULT_P_VALUES.to_vec(),
            out: None,
        }
    }
}

impl RunConfig {
    /// Defaults, overridden by `file`, overridden by `flags`.
    pub fn resolve(
        file: Option<PartialConfig>,
        flags: PartialConfig,
    ) -> Result<Self, ConfigError> {
        let mut cfg = RunConfig::default();
        for layer in [file.unwrap_or_default(), flags] {
            if let Some(v) = layer.catalog {
                cfg.catalog = Some(v);
            }
            if let Some(v) = layer.weights {
                cfg.weights = Some(v);
            }
            if let Some(v) = layer.seed {
                cfg.seed = v;
            }
            if let Some(v) = layer.trials {
                cfg.trials = v;
            }
            if let Some(v) = layer.cutoff {
                cfg.enumeration_cutoff = v;
            }
            if let Some(v) = layer.p_values {
                cfg.p_values = v;
            }
            if let Some(v) = layer.out {
                cfg.out = Some(v);
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.trials < 1 {
            return Err(ConfigError::BadTrials);
        }
        if !(4..=20).contains(&self.enumeration_cutoff) {
            return Err(ConfigError::BadCutoff {
                got: self.enumeration_cutoff,
            });
        }
        if let Some(&bad) = self.p_values.iter().find(|p| !p.is_finite() || **p < 1.0) {
            return Err(ConfigError::BadExponent { got: bad });
        }
        Ok(())
    }

    pub fn suite_config(&self) -> latalg::verify::SuiteConfig {
        latalg::verify::SuiteConfig {
            seed: self.seed,
            trials: self.trials,
            enumeration_cutoff: self.enumeration_cutoff,
            p_values: self.p_values.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file_which_overrides_defaults() {
        let file = PartialConfig {
            seed: Some(5),
            trials: Some(50),
            ..PartialConfig::default()
        };
        let flags = PartialConfig {
            trials: Some(99),
            ..PartialConfig::default()
        };
        let cfg = RunConfig::resolve(Some(file), flags).unwrap();
        assert_eq!(cfg.seed, 5);
        assert_eq!(cfg.trials, 99);
        assert_eq!(cfg.enumeration_cutoff, DEFAULT_CUTOFF);
    }

    #[test]
    fn invariants_are_enforced() {
        let bad = PartialConfig {
            cutoff: Some(3),
            ..PartialConfig::default()
        };
        assert!(matches!(
            RunConfig::resolve(None, bad).unwrap_err(),
            ConfigError::BadCutoff { got: 3 }
        ));

        let bad = PartialConfig {
            p_values: Some(vec![1.0, 0.5]),
            ..PartialConfig::default()
        };
        assert!(matches!(
            RunConfig::resolve(None, bad).unwrap_err(),
            ConfigError::BadExponent { .. }
        ));

        let bad = PartialConfig {
            trials: Some(0),
            ..PartialConfig::default()
        };
        assert!(matches!(
            RunConfig::resolve(None, bad).unwrap_err(),
            ConfigError::BadTrials
        ));
    }
}
