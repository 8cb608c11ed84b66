//! Suite configuration: JSON schema and the shipped default.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::WeightKind;
use crate::youngfn::YoungKind;

/// One (phi, W) pair.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ContextSpec {
    pub phi: YoungKind,
    pub weight: WeightKind,
}

/// Full suite configuration.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Grid size (power of two >= 256).
    pub grid: usize,
    /// Seed for every random draw in the suite.
    pub seed: u64,
    pub contexts: Vec<ContextSpec>,
    /// Corpus mini-language entries.
    pub corpus: Vec<String>,
    /// Check identifiers; see [`KNOWN_CHECKS`].
    pub checks: Vec<String>,
    /// Largest degree in n-sweeps.
    pub n_max: usize,
    /// Fractional orders swept by the modulus-based checks.
    pub k_values: Vec<f64>,
    /// t-grid for the Marchaud check.
    pub t_grid: Vec<f64>,
    /// Worker cap; `None` follows ORLICZ_APPROX_THREADS or the default.
    #[serde(default)]
    pub threads: Option<usize>,
}

pub const KNOWN_CHECKS: &[&str] = &[
    "jackson",
    "second-jackson",
    "geo-mean",
    "refined-jackson",
    "marchaud",
    "realization",
    "k-functional",
    "multiplier",
    "littlewood-paley",
    "rubio-modular",
    "transference",
    "jackson-falsified",
];

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: SuiteConfig =
            serde_json::from_str(text).map_err(|e| Error::ConfigError(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<()> {
        if !self.grid.is_power_of_two() || self.grid < 256 {
            return Err(Error::ConfigError(format!(
                "grid must be a power of two >= 256, got {}",
                self.grid
            )));
        }
        if self.contexts.is_empty() {
            return Err(Error::ConfigError("no contexts listed".into()));
        }
        if self.n_max < 2 || self.n_max > self.grid / 4 {
            return Err(Error::ConfigError(format!(
                "n_max must lie in [2, grid/4], got {}",
                self.n_max
            )));
        }
        for c in &self.checks {
            if !KNOWN_CHECKS.contains(&c.as_str()) {
                return Err(Error::ConfigError(format!(
                    "unknown check `{c}`; known: {KNOWN_CHECKS:?}"
                )));
            }
        }
        for t in &self.t_grid {
            if !(0.0 < *t && *t <= 0.5) {
                return Err(Error::ConfigError(format!(
                    "marchaud t values must lie in (0, 1/2], got {t}"
                )));
            }
        }
        for k in &self.k_values {
            if *k <= 0.0 {
                return Err(Error::ConfigError(format!("k values must be positive, got {k}")));
            }
        }
        Ok(())
    }

    /// The shipped default: 4 Young functions x 3 weights, the 8-entry
    /// corpus, every passing check, desk-scale sweeps.
    pub fn default_config() -> Self {
        let pi = std::f64::consts::PI;
        let phis = vec![
            YoungKind::Power { p: 1.5 },
            YoungKind::Power { p: 2.0 },
            YoungKind::Power { p: 3.0 },
            YoungKind::PowerLog { p: 2.0 },
        ];
        let weights = vec![
            WeightKind::Constant { value: 1.0 },
            WeightKind::Power {
                gamma: 0.4,
                center: pi,
            },
            WeightKind::Power {
                gamma: -0.4,
                center: pi,
            },
        ];
        let mut contexts = Vec::new();
        for phi in &phis {
            for w in &weights {
                contexts.push(ContextSpec {
                    phi: phi.clone(),
                    weight: w.clone(),
                });
            }
        }
        SuiteConfig {
            grid: 4096,
            seed: 20230811,
            contexts,
            corpus: crate::verify::corpus::default_specs(),
            checks: vec![
                "jackson".into(),
                "second-jackson".into(),
                "geo-mean".into(),
                "refined-jackson".into(),
                "marchaud".into(),
                "realization".into(),
                "k-functional".into(),
                "multiplier".into(),
                "littlewood-paley".into(),
                "rubio-modular".into(),
                "transference".into(),
            ],
            n_max: 128,
            k_values: vec![0.5, 1.0, 2.0],
            t_grid: vec![0.5, 0.25, 0.125, 0.0625, 0.03125],
            threads: None,
        }
    }

    /// Self-test configuration: the falsified Jackson check only; a run
    /// must exit nonzero.
    pub fn falsified_selftest_config() -> Self {
        let mut cfg = Self::default_config();
        cfg.contexts.truncate(1); // power(1.5) | const - hypothesis holds
        cfg.corpus = vec!["abs-sin-pow:1.5".into()];
        cfg.checks = vec!["jackson-falsified".into()];
        cfg.k_values = vec![1.0];
        cfg.n_max = 128;
        cfg
    }
}
