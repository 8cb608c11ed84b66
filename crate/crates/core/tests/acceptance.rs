//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line with the measured numbers (run with `--nocapture` to see them on
//! success).

use std::f64::consts::PI;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use orlicz_approx::approximation::{best_approx, KFunctionalTable};
use orlicz_approx::norms::OrliczContext;
use orlicz_approx::operators::{
    frac_binomial_tail, frac_smooth_multiplier, frac_smooth_series, modulus, multiplier_apply,
    square_function,
};
use orlicz_approx::periodic::{Grid, PeriodicFunction, TrigPolynomial};
use orlicz_approx::verify::checks::{
    check_jackson, check_jackson_falsified, check_marchaud, check_refined_jackson,
    check_rubio_modular, geometric_mean_prefix, near_best_table, ModulusSweep,
};
use orlicz_approx::verify::{
    build_corpus, build_entry, reports_to_json, run_suite, summary_text, CorpusEntry, SuiteConfig,
};
use orlicz_approx::weights::{rubio_de_francia, weighted_maximal, Weight};
use orlicz_approx::youngfn::YoungFunction;

const SEED: u64 = 20230811;

/// Criteria carry wall-clock budgets and saturate the machine internally,
/// so they must not run concurrently with each other. The gate tolerates
/// poisoning: a criterion that fails by assertion must not knock out the
/// rest of the suite.
fn gate() -> std::sync::MutexGuard<'static, ()> {
    static GATE: std::sync::OnceLock<std::sync::Mutex<()>> = std::sync::OnceLock::new();
    GATE.get_or_init(|| std::sync::Mutex::new(()))
        .lock()
        .unwrap_or_else(|e| e.into_inner())
}

fn grid() -> Grid {
    Grid::default_grid()
}

/// The twelve default contexts: {power 1.5, 2, 3, power-log 2} x
/// {1, |x-pi|^0.4, |x-pi|^-0.4}.
fn default_contexts() -> Vec<OrliczContext> {
    let g = grid();
    let phis = vec![
        YoungFunction::power(1.5).unwrap(),
        YoungFunction::power(2.0).unwrap(),
        YoungFunction::power(3.0).unwrap(),
        YoungFunction::power_log(2.0).unwrap(),
    ];
    let weights = vec![
        Weight::one(g),
        Weight::power(g, 0.4, PI),
        Weight::power(g, -0.4, PI),
    ];
    let mut out = Vec::new();
    for phi in &phis {
        for w in &weights {
            out.push(OrliczContext::new(phi.clone(), w.clone()).unwrap());
        }
    }
    out
}

fn power_phi_contexts() -> Vec<OrliczContext> {
    default_contexts()
        .into_iter()
        .filter(|c| matches!(c.phi().kind(), orlicz_approx::youngfn::YoungKind::Power { .. }))
        .collect()
}

fn deterministic_corpus() -> Vec<CorpusEntry> {
    build_corpus(
        grid(),
        &orlicz_approx::verify::corpus::default_specs_deterministic(),
        SEED,
    )
    .unwrap()
}

/// Parseval oracle for E_n in the unweighted L2 context, on the discrete
/// object the norm quadrature sees (including the Nyquist bin, which the
/// coefficient table drops).
fn parseval_en(f: &PeriodicFunction, n: usize) -> f64 {
    let c = f.coeffs();
    let mut s = 0.0;
    for j in (n + 1)..=c.jmax() {
        s += c.a[j] * c.a[j] + c.b[j] * c.b[j];
    }
    let nyquist = f
        .samples()
        .iter()
        .enumerate()
        .map(|(i, v)| if i % 2 == 0 { *v } else { -*v })
        .sum::<f64>()
        / f.samples().len() as f64;
    (PI * s + 2.0 * PI * nyquist * nyquist).sqrt()
}

/// 50 random polynomials: ten per degree in {4, 8, 16, 32, 64}.
fn random_polys(seed: u64) -> Vec<(usize, TrigPolynomial)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for &n in &[4usize, 8, 16, 32, 64] {
        for _ in 0..10 {
            let mut t = TrigPolynomial::zeros(n);
            t.a[0] = rng.gen_range(-1.0..1.0);
            for j in 1..=n {
                t.a[j] = rng.gen_range(-1.0..1.0);
                t.b[j] = rng.gen_range(-1.0..1.0);
            }
            out.push((n, t));
        }
    }
    out
}

fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    orlicz_approx::numerics::ls_slope(xs, ys)
}

#[test]
fn criterion_01_closed_form_oracles() {
    let _gate = gate();
    let start = Instant::now();
    let ctx = OrliczContext::new(YoungFunction::power(2.0).unwrap(), Weight::one(grid())).unwrap();
    // Luxemburg norm of cos x is sqrt(pi).
    let f = PeriodicFunction::from_fn(grid(), |x| x.cos());
    let lux = ctx.luxemburg(&f).unwrap();
    assert!(
        (lux - PI.sqrt()).abs() < 1e-12,
        "criterion 1: FAIL - ||cos||: {lux} vs sqrt(pi) {}",
        PI.sqrt()
    );

    // Optimizer E_n against the Parseval oracle for n <= 8, five functions.
    let specs = [
        "cos:3",
        "abs-sin-pow:0.5",
        "abs-sin-pow:1.5",
        "sawtooth",
        "random-analytic",
    ];
    let jobs: Vec<(usize, usize)> = (0..specs.len())
        .flat_map(|f| (1..=8usize).map(move |n| (f, n)))
        .collect();
    let entries: Vec<CorpusEntry> = specs
        .iter()
        .map(|s| build_entry(grid(), s, SEED).unwrap())
        .collect();
    let worst: f64 = jobs
        .par_iter()
        .map(|&(fi, n)| {
            let oracle = parseval_en(&entries[fi].f, n);
            let got = best_approx(&ctx, &entries[fi].f, n, SEED).unwrap().value;
            if oracle > 1e-12 {
                ((got - oracle) / oracle).abs()
            } else {
                got.abs()
            }
        })
        .reduce(|| 0.0, f64::max);
    let elapsed = start.elapsed().as_secs_f64();
    assert!(
        worst <= 1e-6,
        "criterion 1: FAIL - optimizer vs Parseval rel err {worst}"
    );
    assert!(
        elapsed < 10.0,
        "criterion 1: FAIL - runtime {elapsed:.1}s exceeds 10s"
    );
    println!(
        "criterion 1: PASS - ||cos x|| = sqrt(pi) to {:.1e}; optimizer vs Parseval worst rel err {:.2e}; {:.1}s",
        (lux - PI.sqrt()).abs(),
        worst,
        elapsed
    );
}

#[test]
fn criterion_02_series_multiplier_equivalence() {
    let _gate = gate();
    let start = Instant::now();
    // A full-band degree-64 polynomial with unit-scale coefficients.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let mut t = TrigPolynomial::zeros(64);
    t.a[0] = rng.gen_range(-1.0..1.0);
    for j in 1..=64 {
        t.a[j] = rng.gen_range(-1.0..1.0) / (1.0 + j as f64 * 0.1);
        t.b[j] = rng.gen_range(-1.0..1.0) / (1.0 + j as f64 * 0.1);
    }
    let f = t.to_function(grid());
    let mass = t.coeff_l1();
    let mut worst_margin = f64::NEG_INFINITY;
    for &k in &[0.5f64, 1.0, 1.5, 2.0, 2.7] {
        for &h in &[0.5f64, 0.1, 0.01] {
            let (series, tail) = frac_smooth_series(&f, h, k, 512).unwrap();
            assert!((tail - frac_binomial_tail(k, 512)).abs() <= 1e-15);
            let mult = frac_smooth_multiplier(&f, h, k);
            let mut err = 0.0f64;
            for (a, b) in series.samples().iter().zip(mult.samples()) {
                err = err.max((a - b).abs());
            }
            let allowance = tail * mass + 1e-9;
            assert!(
                err <= allowance,
                "criterion 2: FAIL - k={k} h={h}: node error {err} > tail allowance {allowance}"
            );
            worst_margin = worst_margin.max(err / allowance);
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(
        elapsed < 5.0,
        "criterion 2: FAIL - runtime {elapsed:.1}s exceeds 5s"
    );
    println!(
        "criterion 2: PASS - 15 (k, h) pairs on T_64, worst error/allowance {:.3}; {:.1}s",
        worst_margin, elapsed
    );
}

#[test]
fn criterion_03_jackson() {
    let _gate = gate();
    let start = Instant::now();
    let contexts = default_contexts();
    let corpus = deterministic_corpus();
    let n_list: Vec<usize> = (1..=128).collect();
    let ks = [0.5f64, 1.0, 2.0];
    let jobs: Vec<(usize, usize)> = (0..contexts.len())
        .flat_map(|c| (0..corpus.len()).map(move |f| (c, f)))
        .collect();
    let reports: Vec<_> = jobs
        .par_iter()
        .flat_map_iter(|&(c, f)| {
            let ctx = &contexts[c];
            let entry = &corpus[f];
            let errors = near_best_table(ctx, &entry.f, 128).unwrap();
            ks.iter()
                .map(|&k| {
                    let sweep = ModulusSweep::new(ctx, &entry.f, k);
                    check_jackson(ctx, entry, k, &n_list, &errors, &sweep).unwrap()
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    let elapsed = start.elapsed().as_secs_f64();
    for r in &failed {
        println!("  {}", r.summary_line());
    }
    assert!(
        failed.is_empty(),
        "criterion 3: FAIL - {} of {} Jackson reports failed",
        failed.len(),
        reports.len()
    );
    assert!(
        elapsed < 300.0,
        "criterion 3: FAIL - runtime {elapsed:.0}s exceeds 5 min"
    );
    let max_slope = reports
        .iter()
        .map(|r| r.trend_slope)
        .fold(f64::NEG_INFINITY, f64::max);
    println!(
        "criterion 3: PASS - {} reports (12 contexts x 7 functions x 3 orders, n = 1..128), max slope {:.3}; {:.0}s",
        reports.len(),
        max_slope,
        elapsed
    );
}

#[test]
fn criterion_04_refined_jackson_and_geo_mean() {
    let _gate = gate();
    let start = Instant::now();
    // Remark arithmetic: E_n = 2^{-n} makes the geometric mean 2^{-(n+1)/2}.
    let seq: Vec<f64> = (1..=40).map(|n| 2f64.powi(-n)).collect();
    let geo = geometric_mean_prefix(&seq);
    for (i, &g) in geo.iter().enumerate() {
        let expect = 2f64.powf(-((i as f64) + 2.0) / 2.0);
        assert!(
            (g - expect).abs() <= 1e-12 * expect,
            "criterion 4: FAIL - geometric-mean arithmetic at n={} ({g} vs {expect})",
            i + 1
        );
    }

    let contexts = default_contexts();
    let corpus = deterministic_corpus();
    let n_list: Vec<usize> = (1..=128).collect();
    let ks = [0.5f64, 1.0, 2.0];
    let jobs: Vec<(usize, usize)> = (0..contexts.len())
        .flat_map(|c| (0..corpus.len()).map(move |f| (c, f)))
        .collect();
    let reports: Vec<_> = jobs
        .par_iter()
        .flat_map_iter(|&(c, f)| {
            let ctx = &contexts[c];
            let entry = &corpus[f];
            let errors = near_best_table(ctx, &entry.f, 128).unwrap();
            ks.iter()
                .flat_map(|&k| {
                    let sweep = ModulusSweep::new(ctx, &entry.f, k);
                    vec![
                        orlicz_approx::verify::checks::check_geo_mean(
                            ctx, entry, k, &n_list, &errors, &sweep,
                        )
                        .unwrap(),
                        check_refined_jackson(ctx, entry, k, &n_list, &errors, &sweep).unwrap(),
                    ]
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    for r in &failed {
        println!("  {}", r.summary_line());
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(
        failed.is_empty(),
        "criterion 4: FAIL - {} of {} reports failed",
        failed.len(),
        reports.len()
    );
    println!(
        "criterion 4: PASS - geometric-mean arithmetic exact to 1e-12; {} refined/geo-mean reports; {:.0}s",
        reports.len(),
        elapsed
    );
}

/// Bernstein-pair ratios Omega_k(T_n, 1/n) n^{2k} / ||T_n^{(2k)}|| over the
/// random-polynomial sweep, grouped by k.
fn bernstein_ratios(
    contexts: &[OrliczContext],
    polys: &[(usize, TrigPolynomial)],
    k: f64,
) -> Vec<(usize, f64)> {
    let jobs: Vec<(usize, usize)> = (0..contexts.len())
        .flat_map(|c| (0..polys.len()).map(move |p| (c, p)))
        .collect();
    jobs.par_iter()
        .map(|&(c, p)| {
            let ctx = &contexts[c];
            let (n, t) = &polys[p];
            let f = t.to_function(ctx.grid());
            let (om, _) = modulus(ctx, &f, k, 1.0 / *n as f64, 32).unwrap();
            let dnorm = ctx
                .luxemburg(&t.weyl_derivative(2.0 * k).to_function(ctx.grid()))
                .unwrap();
            (*n, om * (*n as f64).powf(2.0 * k) / dnorm)
        })
        .collect()
}

#[test]
fn criterion_05_bernstein_pair() {
    let _gate = gate();
    let contexts = default_contexts();
    let polys = random_polys(SEED ^ 5);
    let mut all_ok = true;
    let mut lines = Vec::new();
    for &k in &[0.5f64, 1.0, 2.0] {
        let ratios = bernstein_ratios(&contexts, &polys, k);
        let lo = ratios.iter().map(|r| r.1).fold(f64::INFINITY, f64::min);
        let hi = ratios.iter().map(|r| r.1).fold(f64::NEG_INFINITY, f64::max);
        let xs: Vec<f64> = ratios.iter().map(|r| (r.0 as f64).ln()).collect();
        let ys: Vec<f64> = ratios.iter().map(|r| r.1.ln()).collect();
        let sl = slope(&xs, &ys);
        let in_range = lo >= 1e-2 && hi <= 1e2;
        let no_trend = sl.abs() <= 0.1;
        all_ok &= in_range && no_trend;
        lines.push(format!(
            "  k={k}: ratio range [{lo:.3e}, {hi:.3e}] {} [1e-2, 1e2], slope {sl:+.3}",
            if in_range { "within" } else { "OUTSIDE" }
        ));
    }
    for l in &lines {
        println!("{l}");
    }
    assert!(
        all_ok,
        "criterion 5: FAIL - Bernstein-pair ratio out of [1e-2, 1e2] (the k = 2 equivalence \
         constant sits near (1/24)^k ~ 1.7e-3; see the per-k ranges above)"
    );
    println!("criterion 5: PASS - Bernstein-pair ratios within [1e-2, 1e2], no trend");
}

#[test]
fn criterion_06_realization_k_functional() {
    let _gate = gate();
    let contexts = default_contexts();
    let polys = random_polys(SEED ^ 5);
    let ks = [0.5f64, 1.0, 2.0];
    let mut all_ok = true;
    let mut lines = Vec::new();
    for &k in &ks {
        let jobs: Vec<(usize, usize)> = (0..contexts.len())
            .flat_map(|c| (0..polys.len()).map(move |p| (c, p)))
            .collect();
        let rows: Vec<(usize, f64, f64)> = jobs
            .par_iter()
            .map(|&(c, p)| {
                let ctx = &contexts[c];
                let (n, t) = &polys[p];
                let f = t.to_function(ctx.grid());
                let (om, _) = modulus(ctx, &f, k, 1.0 / *n as f64, 32).unwrap();
                let r = orlicz_approx::approximation::realization(ctx, &f, k, *n).unwrap();
                let table = KFunctionalTable::new(ctx, &f, 2.0 * k).unwrap();
                let (kf, _) = table.query(1.0 / *n as f64);
                (*n, om / r, om / kf)
            })
            .collect();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &(_, r_ratio, k_ratio) in &rows {
            for v in [r_ratio, 1.0 / r_ratio, k_ratio, 1.0 / k_ratio] {
                lo = lo.min(v);
                hi = hi.max(v);
            }
        }
        let xs: Vec<f64> = rows.iter().map(|r| (r.0 as f64).ln()).collect();
        let ys: Vec<f64> = rows.iter().map(|r| r.1.ln()).collect();
        let sl = slope(&xs, &ys);
        let in_range = lo >= 1e-2 && hi <= 1e2;
        let no_trend = sl.abs() <= 0.1;
        all_ok &= in_range && no_trend;
        lines.push(format!(
            "  k={k}: two-sided ratio range [{lo:.3e}, {hi:.3e}] {} [1e-2, 1e2], Omega/R slope {sl:+.3}",
            if in_range { "within" } else { "OUTSIDE" }
        ));
    }
    for l in &lines {
        println!("{l}");
    }
    assert!(
        all_ok,
        "criterion 6: FAIL - realization/K-functional ratio out of [1e-2, 1e2] (the k = 2 \
         equivalence constants sit near 24^k ~ 576; see the per-k ranges above)"
    );
    println!("criterion 6: PASS - realization and K-functional two-sided ratios within [1e-2, 1e2]");
}

#[test]
fn criterion_07_littlewood_paley_and_multiplier() {
    let _gate = gate();
    let contexts = power_phi_contexts();
    let corpus = deterministic_corpus();
    let lmax = 11usize;
    // Single-block exactness: the square function of a one-block
    // polynomial is |f|, so the norm ratio is exactly 1.
    for ctx in &contexts {
        let f = PeriodicFunction::from_fn(ctx.grid(), |x| (5.0 * x).cos() + 0.5 * (6.0 * x).sin());
        let sq = square_function(&f, lmax).unwrap();
        let ratio = ctx.luxemburg(&sq).unwrap() / ctx.luxemburg(&f).unwrap();
        assert!(
            (ratio - 1.0).abs() <= 1e-10,
            "criterion 7: FAIL - single-block ratio {ratio} != 1"
        );
    }
    // Two-sided boundedness over the corpus.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for ctx in &contexts {
        for entry in &corpus {
            let sq = square_function(&entry.f, lmax).unwrap();
            let r = ctx.luxemburg(&sq).unwrap() / ctx.luxemburg(&entry.f).unwrap();
            assert!(r.is_finite() && r > 0.0);
            lo = lo.min(r);
            hi = hi.max(r);
        }
    }
    // One-sided multiplier boundedness for the standard families.
    let mut mult_hi = f64::NEG_INFINITY;
    for ctx in &contexts {
        for (id, lam) in
            orlicz_approx::verify::checks::standard_multiplier_families(grid().max_freq(), 64, 1.0)
        {
            for entry in &corpus {
                let g = multiplier_apply(&entry.f, &lam).unwrap();
                let r = ctx.luxemburg(&g).unwrap() / ctx.luxemburg(&entry.f).unwrap();
                assert!(
                    r.is_finite(),
                    "criterion 7: FAIL - multiplier {id} unbounded on {}",
                    entry.id
                );
                mult_hi = mult_hi.max(r);
            }
        }
    }
    println!(
        "criterion 7: PASS - single-block ratio 1 +/- 1e-10; square-function ratios in [{lo:.3}, {hi:.3}]; multiplier ratios <= {mult_hi:.3}"
    );
}

#[test]
fn criterion_08_marchaud() {
    let _gate = gate();
    let start = Instant::now();
    let contexts = default_contexts();
    let corpus = deterministic_corpus();
    let t_grid: Vec<f64> = (1..=7).map(|j| 2f64.powi(-j)).collect();
    let pairs = [(0.5f64, 1.0f64), (1.0, 2.0)];
    let jobs: Vec<(usize, usize)> = (0..contexts.len())
        .flat_map(|c| (0..corpus.len()).map(move |f| (c, f)))
        .collect();
    let reports: Vec<_> = jobs
        .par_iter()
        .flat_map_iter(|&(c, f)| {
            let ctx = &contexts[c];
            let entry = &corpus[f];
            pairs
                .iter()
                .map(|&(k, l)| {
                    let sweep_k = ModulusSweep::new(ctx, &entry.f, k);
                    let sweep_l = ModulusSweep::new(ctx, &entry.f, l);
                    check_marchaud(ctx, entry, k, l, &t_grid, &sweep_k, &sweep_l).unwrap()
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    for r in &failed {
        println!("  {}", r.summary_line());
    }
    assert!(
        failed.is_empty(),
        "criterion 8: FAIL - {} of {} Marchaud reports failed",
        failed.len(),
        reports.len()
    );
    println!(
        "criterion 8: PASS - {} Marchaud reports over t in 2^-1..2^-7, pairs (0.5,1) and (1,2); {:.0}s",
        reports.len(),
        start.elapsed().as_secs_f64()
    );
}

#[test]
fn criterion_09_rubio_de_francia() {
    let _gate = gate();
    let g = grid();
    let a0 = 2.0f64;
    let terms = 24usize;
    let weights = vec![
        Weight::one(g),
        Weight::power(g, 0.4, PI),
        Weight::power(g, -0.4, PI),
    ];
    let h_family = orlicz_approx::verify::suite::rubio_h_family(g);
    assert_eq!(h_family.len(), 5);
    let factor = 2.0 * a0 / (2.0 * a0 - 1.0);
    for w in &weights {
        let ctx = OrliczContext::new(YoungFunction::power(2.0).unwrap(), w.clone()).unwrap();
        for (id, h) in &h_family {
            let r = rubio_de_francia(h, w, a0, terms).unwrap();
            // (1) h <= (2a0/(2a0-1)) Rh node-wise.
            for i in 0..g.len() {
                assert!(
                    h.samples()[i] <= factor * r.func.samples()[i] + 1e-12,
                    "criterion 9: FAIL - property (1) at node {i}, {} / {}",
                    id,
                    w.name()
                );
            }
            // (3) M_W Rh <= 2 a0^2 Rh + truncation allowance node-wise.
            let m = weighted_maximal(&r.func, w).unwrap();
            for i in 0..g.len() {
                assert!(
                    m.samples()[i] <= 2.0 * a0 * a0 * r.func.samples()[i] + r.tail_bound + 1e-10,
                    "criterion 9: FAIL - property (3) at node {i}, {} / {}",
                    id,
                    w.name()
                );
            }
            // (2) modular contraction.
            let rep = check_rubio_modular(&ctx, h, id, a0, terms).unwrap();
            assert!(
                rep.pass,
                "criterion 9: FAIL - modular property (2): {}",
                rep.summary_line()
            );
        }
    }
    println!(
        "criterion 9: PASS - properties (1)-(3) and the modular bound hold for 5 h's x 3 weights (a0=2, 24 terms)"
    );
}

#[test]
fn criterion_10_falsified_jackson_rejected() {
    let _gate = gate();
    let ctx = OrliczContext::new(YoungFunction::power(1.5).unwrap(), Weight::one(grid())).unwrap();
    let entry = build_entry(grid(), "abs-sin-pow:1.5", SEED).unwrap();
    let n_list: Vec<usize> = (1..=128).collect();
    let rep = check_jackson_falsified(&ctx, &entry, 1.0, &n_list).unwrap();
    assert!(
        !rep.pass && rep.trend_slope > 0.5,
        "criterion 10: FAIL - falsified Jackson not rejected (slope {})",
        rep.trend_slope
    );
    // And through the suite runner / exit-code path.
    let outcome = run_suite(&SuiteConfig::falsified_selftest_config()).unwrap();
    assert!(
        !outcome.all_pass(),
        "criterion 10: FAIL - self-test suite reported all-pass"
    );
    println!(
        "criterion 10: PASS - falsified Jackson rejected with slope {:.2} > 0.5",
        rep.trend_slope
    );
}

#[test]
fn criterion_11_determinism() {
    let _gate = gate();
    let cfg = SuiteConfig::default_config();
    let out1 = run_suite(&cfg).unwrap();
    let json1 = reports_to_json(&out1.reports);
    let out2 = run_suite(&cfg).unwrap();
    let json2 = reports_to_json(&out2.reports);
    assert!(
        json1 == json2,
        "criterion 11: FAIL - default suite reports differ between runs"
    );
    // The default suite itself must be green.
    if !out1.all_pass() {
        println!("{}", summary_text(&out1));
    }
    assert!(out1.all_pass(), "criterion 11: FAIL - default suite has failures");
    println!(
        "criterion 11: PASS - two runs byte-identical ({} bytes, {} reports, all green)",
        json1.len(),
        out1.reports.len()
    );
}
