//! Run configuration: command-line flags layered over an optional TOML file.

use std::path::Path;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use skewclean::skewtri::DEFAULT_BUDGET;
use skewclean::theorems::{Suite, VerifyConfig, DEFAULT_SAMPLE_SIZE, DEFAULT_SEED, DEFAULT_SWEEP_LIMIT};

#[derive(Copy, Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// The case analysis for n = 2 or 3.
    Constructive,
    /// First strongly clean idempotent in enumeration order.
    BruteForce,
    /// First commuting idempotent with A − E or A + E a unit.
    VeryClean,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Analyze,
    Decompose,
    Verify,
    Sweep,
}

/// Values readable from `--config`. Every key is optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub ring: Option<String>,
    pub sigma: Option<String>,
    pub n: Option<usize>,
    pub matrix: Option<String>,
    pub method: Option<Method>,
    pub suite: Option<String>,
    pub budget: Option<u64>,
    pub sample: Option<u64>,
    pub seed: Option<u64>,
    pub sweep_limit: Option<u64>,
    pub format: Option<Format>,
    pub timing: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
    }
}

/// Flag values as given on the command line; `None` when absent.
#[derive(Debug, Default)]
pub struct Flags {
    pub ring: Option<String>,
    pub sigma: Option<String>,
    pub n: Option<usize>,
    pub matrix: Option<String>,
    pub method: Option<Method>,
    pub suite: Option<String>,
    pub budget: Option<u64>,
    pub sample: Option<u64>,
    pub seed: Option<u64>,
    pub sweep_limit: Option<u64>,
    pub format: Option<Format>,
    pub timing: bool,
}

/// The resolved configuration, echoed in structured output.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub ring: String,
    pub sigma: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    pub budget: u64,
    pub sample_size: u64,
    pub seed: u64,
    pub sweep_limit: u64,
    pub format: Format,
    pub timing: bool,
}

impl RunConfig {
    pub fn resolve(command: Command, flags: Flags, file: FileConfig) -> Result<Self, String> {
        let ring = flags.ring.or(file.ring).ok_or("no ring given; pass --ring or set `ring` in the config file")?;
        let matrix = flags.matrix.or(file.matrix);
        let mut n = flags.n.or(file.n);
        if n.is_none() {
            if let Some(m) = &matrix {
                n = Some(m.matches(';').count() + 1);
            }
        }
        let cfg = RunConfig {
            command,
            ring,
            sigma: flags.sigma.or(file.sigma).unwrap_or_else(|| "id".into()),
            n: match command {
                Command::Decompose => Some(n.ok_or("decompose needs --n or --matrix")?),
                Command::Sweep => Some(n.unwrap_or(2)),
                _ => None,
            },
            matrix: match command {
                Command::Decompose => Some(matrix.ok_or("decompose needs --matrix")?),
                _ => None,
            },
            method: match command {
                Command::Decompose => Some(flags.method.or(file.method).unwrap_or(match n {
                    Some(2 | 3) => Method::Constructive,
                    _ => Method::BruteForce,
                })),
                _ => None,
            },
            suite: match command {
                Command::Verify => Some(flags.suite.or(file.suite).unwrap_or_else(|| "all".into())),
                _ => None,
            },
            budget: flags.budget.or(file.budget).unwrap_or(DEFAULT_BUDGET),
            sample_size: flags.sample.or(file.sample).unwrap_or(DEFAULT_SAMPLE_SIZE),
            seed: flags.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
            sweep_limit: flags.sweep_limit.or(file.sweep_limit).unwrap_or(DEFAULT_SWEEP_LIMIT),
            format: flags.format.or(file.format).unwrap_or_default(),
            timing: flags.timing || file.timing.unwrap_or(false),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), String> {
        if self.budget == 0 {
            return Err("budget must be positive".into());
        }
        if self.sample_size == 0 {
            return Err("sample size must be positive".into());
        }
        if let Some(n) = self.n {
            if n < 2 {
                return Err(format!("n must be at least 2, got {n}"));
            }
        }
        if let Some(suite) = &self.suite {
            suite.parse::<Suite>().map_err(|e| e.to_string())?;
        }
        Ok(())
    }

    pub fn verify_config(&self) -> VerifyConfig {
        VerifyConfig {
            budget: self.budget,
            sweep_limit: self.sweep_limit,
            sample_size: self.sample_size,
            seed: self.seed,
        }
    }
}
