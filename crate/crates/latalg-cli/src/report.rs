//! Report document: config echo, per-entry structure flags, verdicts, and
//! summary tallies. Reports are byte-identical across runs with identical
//! configuration — no timestamps, stable ordering, pinned version string.

use crate::config::RunConfig;
use latalg::verify::{CheckKind, EntrySummary, Verdict};
use serde::Serialize;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub catalog: Option<String>,
    pub weights: Option<String>,
    pub seed: u64,
    pub trials: usize,
    pub enumeration_cutoff: usize,
    pub p_values: Vec<f64>,
}

impl ConfigEcho {
    pub fn from_config(cfg: &RunConfig) -> Self {
        ConfigEcho {
            catalog: cfg.catalog.as_ref().map(|p| p.display().to_string()),
            weights: cfg.weights.as_ref().map(|p| p.display().to_string()),
            seed: cfg.seed,
            trials: cfg.trials,
            enumeration_cutoff: cfg.enumeration_cutoff,
            p_values: cfg.p_values.clone(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub sampled: usize,
    pub exhaustive: usize,
}

pub fn summarize(verdicts: &[Verdict]) -> Summary {
    let mut s = Summary::default();
    for v in verdicts {
        if v.passed {
            s.pass += 1;
        } else {
            s.fail += 1;
        }
        match v.check {
            CheckKind::Sampled => s.sampled += 1,
            CheckKind::Exhaustive => s.exhaustive += 1,
        }
    }
    s
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub config: ConfigEcho,
    pub entries: Vec<EntrySummary>,
    pub verdicts: Vec<Verdict>,
    pub summary: Summary,
}

impl Report {
    pub fn new(cfg: &RunConfig, entries: Vec<EntrySummary>, verdicts: Vec<Verdict>) -> Self {
        let summary = summarize(&verdicts);
        Report {
            tool_version: TOOL_VERSION.to_string(),
            config: ConfigEcho::from_config(cfg),
            entries,
            verdicts,
            summary,
        }
    }

    pub fn render(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("report serialization cannot fail");
        text.push('\n');
        text
    }
}
