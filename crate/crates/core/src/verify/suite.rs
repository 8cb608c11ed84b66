//! Suite runner: expands a configuration into independent jobs, runs them
//! (optionally in parallel), and renders reports as JSON, CSV and text.
//!
//! Determinism: jobs are expanded in a fixed order, each job is evaluated
//! sequentially inside, and results are collected positionally, so two
//! runs of the same configuration produce byte-identical reports.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::norms::OrliczContext;
use crate::periodic::{Grid, PeriodicFunction};
use crate::verify::checks::{
    check_geo_mean, check_jackson, check_jackson_falsified, check_k_functional,
    check_littlewood_paley, check_marchaud, check_multiplier_boundedness, check_realization,
    check_refined_jackson, check_rubio_modular, check_second_jackson, check_transference,
    near_best_table, standard_multiplier_families, ModulusSweep,
};
use crate::verify::config::SuiteConfig;
use crate::verify::corpus::{build_corpus, CorpusEntry};
use crate::verify::report::VerificationReport;
use crate::weights::Weight;
use crate::youngfn::YoungFunction;

/// Geometric degree sweep 1..=n_max (about 10 points per decade, always
/// containing the endpoints).
pub fn n_sweep(n_max: usize) -> Vec<usize> {
    let mut out = vec![];
    let mut n = 1usize;
    while n < n_max {
        out.push(n);
        let next = ((n as f64) * std::f64::consts::SQRT_2).ceil() as usize;
        n = next.max(n + 1);
    }
    out.push(n_max);
    out
}

/// Denser degree sweep used by the suite: every degree up to 16, then a
/// fixed stride per octave so that trend windows hold enough points.
pub fn suite_n_list(n_max: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (1..=16.min(n_max)).collect();
    let mut n = 16usize;
    while n < n_max {
        let stride = (n / 8).max(1);
        n += stride;
        if n <= n_max {
            out.push(n);
        }
    }
    if *out.last().unwrap() != n_max {
        out.push(n_max);
    }
    out
}

/// Dyadic sweep 4, 8, ..., n_max for the realization-type checks.
pub fn dyadic_sweep(n_max: usize) -> Vec<usize> {
    let mut out = vec![];
    let mut n = 4usize;
    while n <= n_max {
        out.push(n);
        n *= 2;
    }
    if out.is_empty() {
        out.push(n_max.max(2));
    }
    out
}

/// The Rubio test inputs: five nonnegative h's.
pub fn rubio_h_family(grid: Grid) -> Vec<(String, PeriodicFunction)> {
    use std::f64::consts::PI;
    vec![
        ("h-const".into(), PeriodicFunction::constant(grid, 1.0)),
        (
            "h-narrow-bump".into(),
            PeriodicFunction::from_fn(grid, |x| (-(x - PI) * (x - PI) * 40.0).exp()),
        ),
        (
            "h-wide-bump".into(),
            PeriodicFunction::from_fn(grid, |x| (-(x - 2.0) * (x - 2.0) * 2.0).exp()),
        ),
        (
            "h-abs-cos".into(),
            PeriodicFunction::from_fn(grid, |x| x.cos().abs() + 0.1),
        ),
        (
            "h-two-bumps".into(),
            PeriodicFunction::from_fn(grid, |x| {
                (-(x - 1.0) * (x - 1.0) * 30.0).exp() + 0.5 * (-(x - 4.5) * (x - 4.5) * 10.0).exp()
            }),
        ),
    ]
}

struct SuiteState {
    contexts: Vec<OrliczContext>,
    corpus: Vec<CorpusEntry>,
    config: SuiteConfig,
}

fn prepare(config: &SuiteConfig) -> Result<SuiteState> {
    config.validate()?;
    let grid = Grid::new(config.grid)?;
    let mut contexts = Vec::with_capacity(config.contexts.len());
    for spec in &config.contexts {
        let phi = YoungFunction::from_kind(spec.phi.clone())
            .map_err(|e| Error::ConfigError(format!("context phi: {e}")))?;
        let w = Weight::from_kind(grid, &spec.weight)
            .map_err(|e| Error::ConfigError(format!("context weight: {e}")))?;
        contexts.push(OrliczContext::new(phi, w)?);
    }
    let corpus = build_corpus(grid, &config.corpus, config.seed)?;
    Ok(SuiteState {
        contexts,
        corpus,
        config: config.clone(),
    })
}

/// Outcome classification used for skip accounting.
fn is_precondition_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::HypothesisViolated(_) | Error::YClassViolated(_) | Error::IndiceOne(_)
    )
}

fn error_report(check: &str, context: &str, function: &str, e: &Error) -> VerificationReport {
    VerificationReport::from_rows(
        check,
        context,
        function,
        "",
        &[(1.0, 1.0, 0.0)],
        1.0,
        false,
        format!("check aborted: {e}"),
    )
}

/// Per-(context, corpus-entry) job covering the modulus-based checks.
fn run_entry_job(
    state: &SuiteState,
    ctx: &OrliczContext,
    entry: &CorpusEntry,
) -> (Vec<VerificationReport>, usize) {
    let cfg = &state.config;
    let wants = |c: &str| cfg.checks.iter().any(|x| x == c);
    let mut out = Vec::new();
    let mut skipped = 0usize;
    if !ctx.hypothesis().satisfied {
        // Count one skip per requested modulus-family check.
        let fam = [
            "jackson",
            "second-jackson",
            "geo-mean",
            "refined-jackson",
            "marchaud",
            "realization",
            "k-functional",
            "jackson-falsified",
            "transference",
        ];
        return (out, fam.iter().filter(|c| wants(c)).count());
    }

    let needs_errors = ["jackson", "second-jackson", "geo-mean", "refined-jackson"]
        .iter()
        .any(|c| wants(c));
    let errors = if needs_errors {
        match near_best_table(ctx, &entry.f, cfg.n_max) {
            Ok(t) => Some(t),
            Err(e) => {
                out.push(error_report("near-best-table", &ctx.name(), &entry.id, &e));
                None
            }
        }
    } else {
        None
    };
    let ns = suite_n_list(cfg.n_max);

    for &k in &cfg.k_values {
        let sweep = ModulusSweep::new(ctx, &entry.f, k);
        if let Some(errors) = errors.as_ref() {
            if wants("jackson") {
                match check_jackson(ctx, entry, k, &ns, errors, &sweep) {
                    Ok(r) => out.push(r),
                    Err(e) if is_precondition_failure(&e) => skipped += 1,
                    Err(e) => out.push(error_report("jackson", &ctx.name(), &entry.id, &e)),
                }
            }
            if wants("geo-mean") {
                match check_geo_mean(ctx, entry, k, &ns, errors, &sweep) {
                    Ok(r) => out.push(r),
                    Err(e) if is_precondition_failure(&e) => skipped += 1,
                    Err(e) => out.push(error_report("geo-mean", &ctx.name(), &entry.id, &e)),
                }
            }
            if wants("refined-jackson") {
                match check_refined_jackson(ctx, entry, k, &ns, errors, &sweep) {
                    Ok(r) => out.push(r),
                    Err(e) if is_precondition_failure(&e) => skipped += 1,
                    Err(e) => {
                        out.push(error_report("refined-jackson", &ctx.name(), &entry.id, &e))
                    }
                }
            }
            if wants("second-jackson") {
                for alpha in [1.0, 2.0] {
                    match check_second_jackson(ctx, entry, k, alpha, &ns, errors) {
                        Ok(r) => out.push(r),
                        Err(e) if is_precondition_failure(&e) => skipped += 1,
                        Err(e) => {
                            out.push(error_report("second-jackson", &ctx.name(), &entry.id, &e))
                        }
                    }
                }
            }
        }
        if wants("realization") {
            match check_realization(ctx, entry, k, &ns, &sweep) {
                Ok(pair) => out.extend(pair),
                Err(e) if is_precondition_failure(&e) => skipped += 1,
                Err(e) => out.push(error_report("realization", &ctx.name(), &entry.id, &e)),
            }
        }
        if wants("k-functional") {
            match check_k_functional(ctx, entry, k, &ns, &sweep) {
                Ok(pair) => out.extend(pair),
                Err(e) if is_precondition_failure(&e) => skipped += 1,
                Err(e) => out.push(error_report("k-functional", &ctx.name(), &entry.id, &e)),
            }
        }
        if wants("jackson-falsified") {
            match check_jackson_falsified(ctx, entry, k, &ns) {
                Ok(r) => out.push(r),
                Err(e) if is_precondition_failure(&e) => skipped += 1,
                Err(e) => out.push(error_report("jackson-falsified", &ctx.name(), &entry.id, &e)),
            }
        }
    }

    // Marchaud over consecutive (k, l) pairs.
    if wants("marchaud") {
        let mut pairs = Vec::new();
        for w in cfg.k_values.windows(2) {
            if w[0] < w[1] {
                pairs.push((w[0], w[1]));
            }
        }
        for (k, l) in pairs {
            let sweep_k = ModulusSweep::new(ctx, &entry.f, k);
            let sweep_l = ModulusSweep::new(ctx, &entry.f, l);
            match check_marchaud(ctx, entry, k, l, &cfg.t_grid, &sweep_k, &sweep_l) {
                Ok(r) => out.push(r),
                Err(e) if is_precondition_failure(&e) => skipped += 1,
                Err(e) => out.push(error_report("marchaud", &ctx.name(), &entry.id, &e)),
            }
        }
    }

    if wants("transference") && entry.tag == crate::verify::corpus::SmoothnessTag::Analytic {
        match check_transference(ctx, entry) {
            Ok(pair) => out.extend(pair),
            Err(e) if is_precondition_failure(&e) => skipped += 1,
            Err(e) => out.push(error_report("transference", &ctx.name(), &entry.id, &e)),
        }
    }

    (out, skipped)
}

/// Per-context job covering the corpus-level checks.
fn run_context_job(state: &SuiteState, ctx: &OrliczContext) -> (Vec<VerificationReport>, usize) {
    let cfg = &state.config;
    let wants = |c: &str| cfg.checks.iter().any(|x| x == c);
    let mut out = Vec::new();
    let mut skipped = 0usize;
    let grid = ctx.grid();

    if wants("multiplier") {
        for (id, lam) in standard_multiplier_families(grid.max_freq(), cfg.n_max, 1.0) {
            match check_multiplier_boundedness(ctx, &lam, &id, &state.corpus) {
                Ok(r) => out.push(r),
                Err(e) if is_precondition_failure(&e) => skipped += 1,
                Err(e) => out.push(error_report("multiplier", &ctx.name(), &id, &e)),
            }
        }
    }
    if wants("littlewood-paley") {
        let lmax = (grid.max_freq() + 1).trailing_zeros() as usize;
        match check_littlewood_paley(ctx, &state.corpus, lmax) {
            Ok(pair) => out.extend(pair),
            Err(e) if is_precondition_failure(&e) => skipped += 1,
            Err(e) => out.push(error_report("littlewood-paley", &ctx.name(), "corpus", &e)),
        }
    }
    if wants("rubio-modular") {
        for (id, h) in rubio_h_family(grid) {
            match check_rubio_modular(ctx, &h, &id, 2.0, 24) {
                Ok(r) => out.push(r),
                Err(e) if is_precondition_failure(&e) => skipped += 1,
                Err(e) => out.push(error_report("rubio-modular", &ctx.name(), &id, &e)),
            }
        }
    }
    (out, skipped)
}

/// Suite outcome: ordered reports plus skip accounting.
#[derive(Debug)]
pub struct SuiteOutcome {
    pub reports: Vec<VerificationReport>,
    pub skipped: usize,
}

impl SuiteOutcome {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }
}

/// Run every requested check over the configured contexts and corpus.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteOutcome> {
    let state = prepare(config)?;
    let threads = config
        .threads
        .or_else(|| {
            std::env::var("ORLICZ_APPROX_THREADS")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::ConfigError(format!("thread pool: {e}")))?;

    // Fixed job expansion order; positional collection keeps determinism.
    let entry_jobs: Vec<(usize, usize)> = (0..state.contexts.len())
        .flat_map(|c| (0..state.corpus.len()).map(move |f| (c, f)))
        .collect();
    let ctx_jobs: Vec<usize> = (0..state.contexts.len()).collect();

    let (entry_results, ctx_results): (Vec<_>, Vec<_>) = pool.install(|| {
        let a: Vec<(Vec<VerificationReport>, usize)> = entry_jobs
            .par_iter()
            .map(|&(c, f)| run_entry_job(&state, &state.contexts[c], &state.corpus[f]))
            .collect();
        let b: Vec<(Vec<VerificationReport>, usize)> = ctx_jobs
            .par_iter()
            .map(|&c| run_context_job(&state, &state.contexts[c]))
            .collect();
        (a, b)
    });

    let mut reports = Vec::new();
    let mut skipped = 0usize;
    for (r, s) in entry_results.into_iter().chain(ctx_results) {
        reports.extend(r);
        skipped += s;
    }
    Ok(SuiteOutcome { reports, skipped })
}

/// Machine-readable rendering (stable field order, shortest round-trip
/// floats; byte-identical across runs of one configuration).
pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

/// Row-level CSV rendering.
pub fn reports_to_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("inequality_id,context,function,params,x,lhs,rhs,ratio\n");
    for r in reports {
        for row in &r.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.inequality_id, r.context, r.function_id, r.params, row.x, row.lhs, row.rhs,
                row.ratio
            ));
        }
    }
    out
}

/// Human summary: one line per report plus totals.
pub fn summary_text(outcome: &SuiteOutcome) -> String {
    let mut out = String::new();
    for r in &outcome.reports {
        out.push_str(&r.summary_line());
        out.push('\n');
    }
    let failed = outcome.reports.iter().filter(|r| !r.pass).count();
    out.push_str(&format!(
        "\n{} checks, {} failed, {} combinations skipped (hypothesis not met)\n",
        outcome.reports.len(),
        failed,
        outcome.skipped
    ));
    out.push_str(if failed == 0 { "ALL PASSED\n" } else { "FAILURES PRESENT\n" });
    out
}
