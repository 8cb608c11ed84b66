//! Test-function corpus and the mini-language used by configs and the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::periodic::{Grid, PeriodicFunction, TrigPolynomial};

/// Smoothness class of a corpus entry, recorded in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SmoothnessTag {
    Analytic,
    /// |sin x|^gamma style: finitely many algebraic singular points.
    FractionalOrder,
    /// Jump discontinuity.
    Jump,
    External,
}

/// One corpus function with its metadata.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    pub f: PeriodicFunction,
    pub tag: SmoothnessTag,
    pub alias_risk: bool,
}

impl CorpusEntry {
    fn new(id: impl Into<String>, f: PeriodicFunction, tag: SmoothnessTag) -> Self {
        let alias_risk = f.alias_risk();
        CorpusEntry {
            id: id.into(),
            f,
            tag,
            alias_risk,
        }
    }
}

/// Parse a corpus spec: `cos:m`, `sin:m`, `abs-sin-pow:g`, `sawtooth`,
/// `random-analytic`, `const:c`, or `csv:<path>`.
pub fn build_entry(grid: Grid, spec: &str, seed: u64) -> Result<CorpusEntry> {
    let (head, arg) = match spec.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (spec, None),
    };
    match head {
        "cos" => {
            let m: usize = parse_arg(spec, arg)?;
            Ok(CorpusEntry::new(
                spec,
                PeriodicFunction::from_fn(grid, |x| (m as f64 * x).cos()),
                SmoothnessTag::Analytic,
            ))
        }
        "sin" => {
            let m: usize = parse_arg(spec, arg)?;
            Ok(CorpusEntry::new(
                spec,
                PeriodicFunction::from_fn(grid, |x| (m as f64 * x).sin()),
                SmoothnessTag::Analytic,
            ))
        }
        "abs-sin-pow" => {
            let g: f64 = parse_arg(spec, arg)?;
            if g <= 0.0 {
                return Err(Error::ConfigError(format!("{spec}: exponent must be positive")));
            }
            Ok(CorpusEntry::new(
                spec,
                PeriodicFunction::from_fn(grid, move |x| x.sin().abs().powf(g)),
                SmoothnessTag::FractionalOrder,
            ))
        }
        "sawtooth" => Ok(CorpusEntry::new(
            spec,
            PeriodicFunction::from_fn(grid, |x| (2.0 * (x - PI) / PI).clamp(-1.0, 1.0)),
            SmoothnessTag::Jump,
        )),
        "random-analytic" => Ok(CorpusEntry::new(
            spec,
            random_analytic(grid, seed),
            SmoothnessTag::Analytic,
        )),
        "const" => {
            let c: f64 = parse_arg(spec, arg)?;
            Ok(CorpusEntry::new(
                spec,
                PeriodicFunction::constant(grid, c),
                SmoothnessTag::Analytic,
            ))
        }
        "csv" => {
            let path = arg.ok_or_else(|| Error::ConfigError("csv: needs a path".into()))?;
            let text = std::fs::read_to_string(path)?;
            Ok(CorpusEntry::new(
                spec,
                PeriodicFunction::from_csv(grid, &text)?,
                SmoothnessTag::External,
            ))
        }
        _ => Err(Error::ConfigError(format!("unknown corpus spec `{spec}`"))),
    }
}

fn parse_arg<T: std::str::FromStr>(spec: &str, arg: Option<&str>) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    arg.ok_or_else(|| Error::ConfigError(format!("`{spec}` needs an argument after `:`")))?
        .parse()
        .map_err(|e| Error::ConfigError(format!("`{spec}`: {e}")))
}

/// Analytic random entry: geometrically decaying coefficients with signs
/// and magnitudes drawn from a seeded generator.
fn random_analytic(grid: Grid, seed: u64) -> PeriodicFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let degree = 48usize;
    let rho = 0.82f64;
    let mut t = TrigPolynomial::zeros(degree);
    t.a[0] = rng.gen_range(-1.0..1.0);
    let mut decay = 1.0;
    for j in 1..=degree {
        decay *= rho;
        t.a[j] = decay * rng.gen_range(-1.0..1.0);
        t.b[j] = decay * rng.gen_range(-1.0..1.0);
    }
    t.to_function(grid)
}

/// The seven deterministic default entries (three cosines, three
/// fractional |sin| powers, a clipped sawtooth).
pub fn default_specs_deterministic() -> Vec<String> {
    vec![
        "cos:1".into(),
        "cos:3".into(),
        "cos:17".into(),
        "abs-sin-pow:0.5".into(),
        "abs-sin-pow:1.5".into(),
        "abs-sin-pow:2.5".into(),
        "sawtooth".into(),
    ]
}

/// Default corpus: the deterministic seven plus a seeded analytic entry.
pub fn default_specs() -> Vec<String> {
    let mut v = default_specs_deterministic();
    v.push("random-analytic".into());
    v
}

pub fn build_corpus(grid: Grid, specs: &[String], seed: u64) -> Result<Vec<CorpusEntry>> {
    specs.iter().map(|s| build_entry(grid, s, seed)).collect()
}
