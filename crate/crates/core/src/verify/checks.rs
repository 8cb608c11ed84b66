//! Inequality checks: each evaluates both sides of one theorem over a
//! sweep and returns a [`VerificationReport`].

use std::cell::RefCell;
use std::collections::BTreeMap;

use crate::approximation::{near_best_error, realization, KFunctionalTable};
use crate::error::{Error, Result};
use crate::norms::{modular_with, OrliczContext};
use crate::operators::{
    frac_smooth_multiplier, multiplier_apply, square_function, transference_xi,
    MultiplierSequence,
};
use crate::periodic::PeriodicFunction;
use crate::verify::corpus::CorpusEntry;
use crate::verify::report::{slope_tol_for, VerificationReport};
use crate::weights::rubio_de_francia;
use crate::youngfn::{complementary_sup, YoungKind};

/// Geometric h-lattice density for shared modulus sweeps: six points per
/// octave gives at least the 32 points per [delta/64, delta] used by the
/// standalone modulus.
const LATTICE_PER_OCTAVE: f64 = 6.0;

/// Shared evaluation of Omega_k(f, .) across many delta queries: norms of
/// (I - A_h)^k f are memoized on an absolute geometric h-lattice, and each
/// query adds its exact endpoint h = delta.
pub struct ModulusSweep<'a> {
    ctx: &'a OrliczContext,
    f: &'a PeriodicFunction,
    k: f64,
    norms: RefCell<BTreeMap<u64, f64>>,
}

impl<'a> ModulusSweep<'a> {
    pub fn new(ctx: &'a OrliczContext, f: &'a PeriodicFunction, k: f64) -> Self {
        ModulusSweep {
            ctx,
            f,
            k,
            norms: RefCell::new(BTreeMap::new()),
        }
    }

    fn norm_at(&self, h: f64) -> Result<f64> {
        let key = h.to_bits();
        if let Some(&v) = self.norms.borrow().get(&key) {
            return Ok(v);
        }
        let g = frac_smooth_multiplier(self.f, h, self.k);
        let v = self.ctx.luxemburg(&g)?;
        self.norms.borrow_mut().insert(key, v);
        Ok(v)
    }

    /// Omega_k(f, delta): max over the lattice points inside
    /// [delta/64, delta] plus the exact endpoint.
    pub fn omega(&self, delta: f64) -> Result<f64> {
        if self.k == 0.0 {
            return self.ctx.luxemburg(self.f);
        }
        let mut best = self.norm_at(delta)?;
        let j_lo = (-(delta.log2()) * LATTICE_PER_OCTAVE).ceil() as i64;
        let j_hi = (-((delta / 64.0).log2()) * LATTICE_PER_OCTAVE).floor() as i64;
        for j in j_lo..=j_hi {
            let h = 2f64.powf(-(j as f64) / LATTICE_PER_OCTAVE);
            if h > delta {
                continue;
            }
            best = best.max(self.norm_at(h)?);
        }
        Ok(best)
    }
}

fn require_hypothesis(ctx: &OrliczContext) -> Result<()> {
    if !ctx.hypothesis().satisfied {
        return Err(Error::HypothesisViolated(format!(
            "{}: phi in Q and W in A_p(phi) not certified",
            ctx.name()
        )));
    }
    Ok(())
}

/// Near-best errors E~_nu = ||f - S_nu f|| for nu = 0..=n_max.
pub fn near_best_table(
    ctx: &OrliczContext,
    f: &PeriodicFunction,
    n_max: usize,
) -> Result<Vec<f64>> {
    (0..=n_max).map(|n| near_best_error(ctx, f, n)).collect()
}

/// Jackson inequality E_n(f) <= C Omega_k(f, 1/n) over n in `n_list`.
pub fn check_jackson(
    ctx: &OrliczContext,
    entry: &CorpusEntry,
    k: f64,
    n_list: &[usize],
    errors: &[f64],
    sweep: &ModulusSweep,
) -> Result<VerificationReport> {
    require_hypothesis(ctx)?;
    let scale = ctx.luxemburg(&entry.f)?;
    let mut raw = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let lhs = errors[n];
        let rhs = sweep.omega(1.0 / n as f64)?;
        raw.push((n as f64, lhs, rhs));
    }
    Ok(VerificationReport::from_rows_with_tol(
        "jackson",
        ctx.name(),
        &entry.id,
        format!("k={k}"),
        &raw,
        scale,
        true,
        slope_tol_for(&entry.tag),
        "lhs: near-best error; rhs: Omega_k(f, 1/n)",
    ))
}

/// Falsified Jackson with the right side squared; the harness must reject
/// it with a strong growth trend.
pub fn check_jackson_falsified(
    ctx: &OrliczContext,
    entry: &CorpusEntry,
    k: f64,
    n_list: &[usize],
) -> Result<VerificationReport> {
    require_hypothesis(ctx)?;
    let scale = ctx.luxemburg(&entry.f)?;
    let sweep = ModulusSweep::new(ctx, &entry.f, k);
    let errors = near_best_table(ctx, &entry.f, *n_list.iter().max().unwrap_or(&1))?;
    let mut raw = Vec::new();
    for &n in n_list {
        let omega = sweep.omega(1.0 / n as f64)?;
        raw.push((n as f64, errors[n], omega * omega));
    }
    Ok(VerificationReport::from_rows_with_tol(
        "jackson-falsified",
        ctx.name(),
        &entry.id,
        format!("k={k}"),
        &raw,
        scale,
        true,
        slope_tol_for(&entry.tag),
        "self-test: rhs deliberately squared; expected to FAIL",
    ))
}

/// Second Jackson inequality E_n(f) <= C n^{-alpha} Omega_k(f^(alpha), 1/n).
/// Precondition: the derivative is representable (no alias risk).
pub fn check_second_jackson(
    ctx: &OrliczContext,
    entry: &CorpusEntry,
    k: f64,
    alpha: f64,
    n_list: &[usize],
    errors: &[f64],
) -> Result<VerificationReport> {
    require_hypothesis(ctx)?;
    if entry.alias_risk {
        return Err(Error::HypothesisViolated(format!(
            "{}: alias risk flagged, derivative not representable",
            entry.id
        )));
    }
    let scale = ctx.luxemburg(&entry.f)?;
    let deriv = crate::operators::weyl_derivative(&entry.f, alpha);
    // The derivative itself must be representable: differentiation lifts
    // the spectrum by j^alpha and can push a clean function into the
    // aliased regime.
    if deriv.alias_risk() {
        return Err(Error::HypothesisViolated(format!(
            "{}: order-{alpha} derivative carries alias risk",
            entry.id
        )));
    }
    let sweep = ModulusSweep::new(ctx, &deriv, k);
    let mut raw = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let lhs = errors[n];
        let rhs = (n as f64).powf(-alpha) * sweep.omega(1.0 / n as f64)?;
        raw.push((n as f64, lhs, rhs));
    }
    Ok(VerificationReport::from_rows_with_tol(
        "second-jackson",
        ctx.name(),
        &entry.id,
        format!("k={k} alpha={alpha}"),
        &raw,
        scale,
        true,
        slope_tol_for(&entry.tag),
        "rhs: n^-alpha Omega_k of the Weyl derivative",
    ))
}

/// Geometric means of near-best errors 1..n per retained prefix.
pub fn geometric_mean_prefix(errors_from_1: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(errors_from_1.len());
    let mut log_sum = 0.0f64;
    let mut hit_zero = false;
    for (i, &e) in errors_from_1.iter().enumerate() {
        if e <= 0.0 {
            hit_zero = true;
        }
        if hit_zero {
            out.push(0.0);
        } else {
            log_sum += e.ln();
            out.push((log_sum / (i + 1) as f64).exp());
        }
    }
    out
}

/// Geometric-mean refinement (prod_{j<=n} E_j)^{1/n} <= C Omega_k(f, 1/n).
pub fn check_geo_mean(
    ctx: &OrliczContext,
    entry: &CorpusEntry,
    k: f64,
    n_list: &[usize],
    errors: &[f64],
    sweep: &ModulusSweep,
) -> Result<VerificationReport> {
    require_hypothesis(ctx)?;
    let scale = ctx.luxemburg(&entry.f)?;
    let n_max = *n_list.iter().max().unwrap_or(&1);
    let geo = geometric_mean_prefix(&errors[1..=n_max]);
    let mut raw = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let lhs = geo[n - 1];
        let rhs = sweep.omega(1.0 / n as f64)?;
        raw.push((n as f64, lhs, rhs));
    }
    Ok(VerificationReport::from_rows_with_tol(
        "geo-mean",
        ctx.name(),
        &entry.id,
        format!("k={k}"),
        &raw,
        scale,
        true,
        slope_tol_for(&entry.tag),
        "lhs: geometric mean of near-best errors 1..n",
    ))
}

/// Refined Jackson: n^{-2k} (sum_{nu=1}^{n} nu^{2 beta k - 1}
/// E_{nu-1}^beta)^{1/beta} <= C Omega_k(f, 1/n), beta = max(2, q).
pub fn check_refined_jackson(
    ctx: &OrliczContext,
    entry: &CorpusEntry,
    k: f64,
    n_list: &[usize],
    errors: &[f64],
    sweep: &ModulusSweep,
) -> Result<VerificationReport> {
    require_hypothesis(ctx)?;
    let (p, q) = ctx
        .y_class()
        .ok_or_else(|| Error::YClassViolated(format!("{}: no declared Y[p,q]", ctx.name())))?;
    let cert = ctx.phi().y_class_check(p, q);
    if !cert.holds {
        return Err(Error::YClassViolated(format!(
            "{}: Y[{p},{q}] fails at u = {:?}",
            ctx.name(),
            cert.witness_x
        )));
    }
    let beta = q.max(2.0);
    let scale = ctx.luxemburg(&entry.f)?;
    let n_max = *n_list.iter().max().unwrap_or(&1);
    // Cumulative sums of nu^{2 beta k - 1} E_{nu-1}^beta.
    let mut cum = Vec::with_capacity(n_max + 1);
    cum.push(0.0f64);
    for nu in 1..=n_max {
        let term = (nu as f64).powf(2.0 * beta * k - 1.0) * errors[nu - 1].powf(beta);
        cum.push(cum[nu - 1] + term);
    }
    let mut raw = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let lhs = cum[n].powf(1.0 / beta) / (n as f64).powf(2.0 * k);
        let rhs = sweep.omega(1.0 / n as f64)?;
        raw.push((n as f64, lhs, rhs));
    }
    Ok(VerificationReport::from_rows_with_tol(
        "refined-jackson",
        ctx.name(),
        &entry.id,
        format!("k={k} beta={beta}"),
        &raw,
        scale,
        true,
        slope_tol_for(&entry.tag),
        "statement form with E_{nu-1}; sum uses near-best errors",
    ))
}

/// Marchaud-type inverse bound: t^{2k} { int_t^1 [Omega_l(f,u)/u^{2k}]^beta
/// du/u }^{1/beta} <= C Omega_k(f,t), for k < l. The report x is 1/t.
pub fn check_marchaud(
    ctx: &OrliczContext,
    entry: &CorpusEntry,
    k: f64,
    l: f64,
    t_grid: &[f64],
    sweep_k: &ModulusSweep,
    sweep_l: &ModulusSweep,
) -> Result<VerificationReport> {
    require_hypothesis(ctx)?;
    if k >= l {
        return Err(Error::BadOrder(format!("need k < l, got k={k} l={l}")));
    }
    let (_, q) = ctx
        .y_class()
        .ok_or_else(|| Error::YClassViolated(format!("{}: no declared Y[p,q]", ctx.name())))?;
    let beta = q.max(2.0);
    let scale = ctx.luxemburg(&entry.f)?;
    let mut raw = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        if !(0.0 < t && t <= 0.5) {
            return Err(Error::InvalidInput(format!("t must lie in (0, 1/2], got {t}")));
        }
        // Geometric u-grid at 64 points per decade, anchored at u = 1 so
        // that the points are shared across the t sweep; trapezoid in ln u.
        let steps = (64.0 * (1.0 / t).log10()).ceil() as usize;
        let mut us: Vec<f64> = (0..=steps)
            .map(|i| 10f64.powf(-(i as f64) / 64.0))
            .filter(|u| *u > t)
            .collect();
        us.push(t);
        us.reverse(); // ascending from t to 1
        let mut integral = 0.0;
        let mut prev: Option<(f64, f64)> = None;
        for &u in &us {
            let om = sweep_l.omega(u)?;
            let g = (om / u.powf(2.0 * k)).powf(beta);
            if let Some((lu_prev, g_prev)) = prev {
                integral += 0.5 * (g + g_prev) * (u.ln() - lu_prev);
            }
            prev = Some((u.ln(), g));
        }
        let lhs = t.powf(2.0 * k) * integral.powf(1.0 / beta);
        let rhs = sweep_k.omega(t)?;
        raw.push((1.0 / t, lhs, rhs));
    }
    Ok(VerificationReport::from_rows_with_tol(
        "marchaud",
        ctx.name(),
        &entry.id,
        format!("k={k} l={l} beta={beta}"),
        &raw,
        scale,
        true,
        slope_tol_for(&entry.tag),
        "x = 1/t; integral by trapezoid on a geometric u-grid",
    ))
}

/// Realization equivalence Omega_k(f,1/n) ~ R_{2k}(f,1/n): both directions.
pub fn check_realization(
    ctx: &OrliczContext,
    entry: &CorpusEntry,
    k: f64,
    n_list: &[usize],
    sweep: &ModulusSweep,
) -> Result<[VerificationReport; 2]> {
    require_hypothesis(ctx)?;
    let scale = ctx.luxemburg(&entry.f)?;
    let mut up = Vec::with_capacity(n_list.len());
    let mut down = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let om = sweep.omega(1.0 / n as f64)?;
        let r = realization(ctx, &entry.f, k, n)?;
        up.push((n as f64, om, r));
        down.push((n as f64, r, om));
    }
    let tol = slope_tol_for(&entry.tag);
    Ok([
        VerificationReport::from_rows_with_tol(
            "realization-upper",
            ctx.name(),
            &entry.id,
            format!("k={k}"),
            &up,
            scale,
            true,
            tol,
            "Omega_k(f,1/n) / R_2k(f,1/n)",
        ),
        VerificationReport::from_rows_with_tol(
            "realization-lower",
            ctx.name(),
            &entry.id,
            format!("k={k}"),
            &down,
            scale,
            true,
            tol,
            "R_2k(f,1/n) / Omega_k(f,1/n)",
        ),
    ])
}

/// K-functional equivalence Omega_k(f,1/n) ~ K_{2k}(f,1/n): both directions.
pub fn check_k_functional(
    ctx: &OrliczContext,
    entry: &CorpusEntry,
    k: f64,
    n_list: &[usize],
    sweep: &ModulusSweep,
) -> Result<[VerificationReport; 2]> {
    require_hypothesis(ctx)?;
    let scale = ctx.luxemburg(&entry.f)?;
    let table = KFunctionalTable::new(ctx, &entry.f, 2.0 * k)?;
    let mut up = Vec::with_capacity(n_list.len());
    let mut down = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let om = sweep.omega(1.0 / n as f64)?;
        let (kf, _) = table.query(1.0 / n as f64);
        up.push((n as f64, om, kf));
        down.push((n as f64, kf, om));
    }
    let tol = slope_tol_for(&entry.tag);
    Ok([
        VerificationReport::from_rows_with_tol(
            "k-functional-upper",
            ctx.name(),
            &entry.id,
            format!("k={k}"),
            &up,
            scale,
            true,
            tol,
            "Omega_k / K_2k over the polynomial candidate family",
        ),
        VerificationReport::from_rows_with_tol(
            "k-functional-lower",
            ctx.name(),
            &entry.id,
            format!("k={k}"),
            &down,
            scale,
            true,
            tol,
            "K_2k / Omega_k over the polynomial candidate family",
        ),
    ])
}

/// Marcinkiewicz multiplier boundedness over a corpus, one row per entry.
pub fn check_multiplier_boundedness(
    ctx: &OrliczContext,
    lam: &MultiplierSequence,
    lam_id: &str,
    corpus: &[CorpusEntry],
) -> Result<VerificationReport> {
    require_hypothesis(ctx)?;
    lam.certify()?;
    let mut raw = Vec::with_capacity(corpus.len());
    let mut scale = 0.0f64;
    for (i, entry) in corpus.iter().enumerate() {
        let g = multiplier_apply(&entry.f, lam)?;
        let lhs = ctx.luxemburg(&g)?;
        let rhs = ctx.luxemburg(&entry.f)?;
        scale = scale.max(rhs);
        raw.push(((i + 1) as f64, lhs, rhs));
    }
    Ok(VerificationReport::from_rows(
        "multiplier",
        ctx.name(),
        lam_id,
        format!("A={:.4}", lam.bound),
        &raw,
        scale,
        false,
        "rows indexed by corpus entry; boundedness only",
    ))
}

/// Littlewood-Paley square-function equivalence over a corpus; power-kind
/// phi only (phi(t^{1/p0}) convex for some p0 > 1).
pub fn check_littlewood_paley(
    ctx: &OrliczContext,
    corpus: &[CorpusEntry],
    lmax: usize,
) -> Result<[VerificationReport; 2]> {
    require_hypothesis(ctx)?;
    match ctx.phi().kind() {
        YoungKind::Power { .. } => {}
        _ => {
            return Err(Error::HypothesisViolated(format!(
                "{}: square-function check needs a power-kind phi",
                ctx.name()
            )))
        }
    }
    let mut up = Vec::with_capacity(corpus.len());
    let mut down = Vec::with_capacity(corpus.len());
    let mut scale = 0.0f64;
    for (i, entry) in corpus.iter().enumerate() {
        let sq = square_function(&entry.f, lmax)?;
        let ns = ctx.luxemburg(&sq)?;
        let nf = ctx.luxemburg(&entry.f)?;
        scale = scale.max(nf);
        up.push(((i + 1) as f64, ns, nf));
        down.push(((i + 1) as f64, nf, ns));
    }
    Ok([
        VerificationReport::from_rows(
            "littlewood-paley-upper",
            ctx.name(),
            "corpus",
            format!("lmax={lmax}"),
            &up,
            scale,
            false,
            "||square function|| / ||f||; block 0 carries the mean term",
        ),
        VerificationReport::from_rows(
            "littlewood-paley-lower",
            ctx.name(),
            "corpus",
            format!("lmax={lmax}"),
            &down,
            scale,
            false,
            "||f|| / ||square function||",
        ),
    ])
}

/// Modular contraction of the Rubio iteration: with psi(u) = phi(u^{1/p0})
/// convex and psi~ its complementary, int psi~(Rh) W <= ((2a0-1)/(2a0))
/// int psi~(h) W within the truncation allowance.
pub fn check_rubio_modular(
    ctx: &OrliczContext,
    h_fn: &PeriodicFunction,
    h_id: &str,
    a0: f64,
    terms: usize,
) -> Result<VerificationReport> {
    if h_fn.samples().iter().any(|&x| x < -1e-15) {
        return Err(Error::InvalidInput("h must be nonnegative".into()));
    }
    let p = ctx.phi().indice();
    if p <= 1.0 + 1e-9 {
        return Err(Error::IndiceOne("rubio modular check needs p(phi) > 1".into()));
    }
    // Convex representation phi(u^{1/p0}); the midpoint choice keeps
    // p/p0 in (1, 2).
    let p0 = 0.5 * (1.0 + p);
    let phi = ctx.phi().clone();
    let psi_tilde = build_psi_tilde(move |u: f64| phi.eval(u.powf(1.0 / p0)));
    let r = rubio_de_francia(h_fn, ctx.weight(), a0, terms)?;
    let m_r = modular_with(&psi_tilde, ctx.weight().samples(), &r.func)?;
    let m_h = modular_with(&psi_tilde, ctx.weight().samples(), h_fn)?;
    let bound = (2.0 * a0 - 1.0) / (2.0 * a0);
    // Truncation allowance on the modular scale.
    let tail_tol = 1e-9 * (1.0 + m_h);
    let raw = vec![(1.0, m_r, bound * m_h + tail_tol)];
    Ok(VerificationReport::from_rows(
        "rubio-modular",
        ctx.name(),
        h_id,
        format!("a0={a0} terms={terms} p0={p0:.3}"),
        &raw,
        m_h.max(1.0),
        false,
        "modular of psi~ with psi(u) = phi(u^{1/p0})",
    ))
}

/// psi~ evaluated through a cached log-log table (psi~ itself needs a sup
/// per evaluation).
fn build_psi_tilde(psi: impl Fn(f64) -> f64 + 'static) -> impl Fn(f64) -> f64 {
    let lo: f64 = 1e-9;
    let hi: f64 = 1e9;
    let points = 2048usize;
    let log_lo = lo.ln();
    let step = (hi.ln() - log_lo) / (points - 1) as f64;
    let table: Vec<f64> = (0..points)
        .map(|i| {
            let y = (log_lo + i as f64 * step).exp();
            complementary_sup(&psi, y).unwrap_or(f64::INFINITY).max(1e-300).ln()
        })
        .collect();
    move |y: f64| {
        let y = y.abs();
        if y == 0.0 {
            return 0.0;
        }
        let t = (y.ln() - log_lo) / step;
        let (i, frac) = if t <= 0.0 {
            (0usize, t)
        } else if t >= (points - 1) as f64 {
            (points - 2, t - (points - 2) as f64)
        } else {
            (t.floor() as usize, t.fract())
        };
        (table[i] * (1.0 - frac) + table[i + 1] * frac).exp()
    }
}

/// Transference probes: (a) uniform continuity of Xi_{f,G} against a
/// shrinking shift, (b) the norm sandwich against a near-maximizing simple
/// G from dyadic-arc candidates with unit dual norm.
pub fn check_transference(
    ctx: &OrliczContext,
    entry: &CorpusEntry,
) -> Result<[VerificationReport; 2]> {
    require_hypothesis(ctx)?;
    let grid = ctx.grid();
    let h = grid.step();
    // Candidate family: normalized indicators of dyadic arcs.
    let mut best_xi_sup = 0.0f64;
    let abs_f = entry.f.abs();
    for level in 1..=5usize {
        let m = grid.len() >> level;
        for offset in 0..4usize {
            let start = offset * (grid.len() / 4);
            let mut samples = vec![0.0; grid.len()];
            for i in 0..=m {
                samples[(start + i) % grid.len()] = 1.0;
            }
            let g = PeriodicFunction::from_samples(grid, samples)?;
            let dual_norm = ctx.dual_luxemburg(&g)?;
            if dual_norm <= 0.0 {
                continue;
            }
            let g_unit = g.scale(1.0 / dual_norm);
            let xi = transference_xi(&abs_f, &g_unit);
            best_xi_sup = best_xi_sup.max(xi.max_abs());
        }
    }
    let norm_f = ctx.luxemburg(&entry.f)?;
    let sandwich = VerificationReport::from_rows(
        "transference-sandwich",
        ctx.name(),
        &entry.id,
        "",
        &[(1.0, norm_f, best_xi_sup)],
        norm_f.max(1.0),
        false,
        "||f||_{phi,W} against sup_u Xi_{|f|,G*}(u) over dyadic-arc G",
    );

    // Continuity probe with the full-mass normalized G* = 1 arc family at
    // level 1; eta runs over shrinking grid multiples.
    let one = PeriodicFunction::constant(grid, 1.0);
    let dual_norm = ctx.dual_luxemburg(&one)?;
    let xi = transference_xi(&entry.f, &one.scale(1.0 / dual_norm.max(1e-300)));
    let n = grid.len();
    let mut raw = Vec::new();
    for &mult in &[64usize, 32, 16, 8, 4, 2, 1] {
        let shift = mult;
        let mut modulus = 0.0f64;
        for i in 0..n {
            modulus = modulus.max((xi.samples()[(i + shift) % n] - xi.samples()[i]).abs());
        }
        raw.push((1.0 / (shift as f64 * h), modulus, 1.0));
    }
    let decreasing = raw.windows(2).all(|w| w[1].1 <= w[0].1 * (1.0 + 1e-9));
    let mut continuity = VerificationReport::from_rows(
        "transference-continuity",
        ctx.name(),
        &entry.id,
        "",
        &raw,
        norm_f.max(1.0),
        false,
        "continuity modulus of Xi against shrinking shift eta; x = 1/eta",
    );
    continuity.pass = continuity.pass && (decreasing || entry.tag != crate::verify::corpus::SmoothnessTag::Analytic);
    Ok([sandwich, continuity])
}

/// Multiplier families exercised by the suite.
pub fn standard_multiplier_families(jmax: usize, n: usize, r: f64) -> Vec<(String, MultiplierSequence)> {
    let mut out = Vec::new();
    out.push((
        "lambda=1".into(),
        MultiplierSequence::new_auto(vec![1.0; jmax + 1]),
    ));
    // Dyadic block sign pattern.
    let signs: Vec<f64> = (0..=jmax)
        .map(|j| {
            if j == 0 {
                1.0
            } else {
                let block = (j as f64).log2().floor() as i32;
                if block % 2 == 0 {
                    1.0
                } else {
                    -1.0
                }
            }
        })
        .collect();
    out.push(("dyadic-signs".into(), MultiplierSequence::new_auto(signs)));
    // Block sequences from the refined-Jackson machinery.
    let mut h_seq = vec![0.0f64];
    let mut l_seq = vec![0.0f64];
    for l in 1..=jmax {
        let nu = (l as f64).log2().floor() as i32 + 1;
        h_seq.push((2f64.powi(2 * nu) / (l as f64).powi(2)).powf(r));
        let x = l as f64 / (2.0 * n as f64);
        let denom = 1.0 - crate::operators::sinc(x);
        l_seq.push(if l <= 2 * n && denom > 0.0 {
            (x * x / denom).powf(r)
        } else {
            0.0
        });
    }
    out.push((format!("h-blocks r={r}"), MultiplierSequence::new_auto(h_seq)));
    out.push((format!("lambda-blocks r={r}"), MultiplierSequence::new_auto(l_seq)));
    out
}
