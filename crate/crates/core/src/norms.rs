//! Modulars and norms on the weighted Orlicz space L_W^phi.
//!
//! The gauge (Kolmogorov-Minkowski) norm inf{tau : int phi(|f|/tau) W <= 1}
//! is the workhorse; the Amemiya form inf_tau (1 + int phi(tau |f|) W)/tau
//! equals the duality (Orlicz) norm for convex phi and an equivalent norm
//! otherwise. For the homogeneous power kind both have closed forms, which
//! double as oracles for the search paths used by the other kinds.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::periodic::{Grid, PeriodicFunction, TrigPolynomial};
use crate::weights::{ApEstimate, Weight};
use crate::youngfn::{complementary_sup, YoungFunction, YoungKind};

/// Relative bisection tolerance for the gauge norm.
const LUX_REL_TOL: f64 = 1e-10;
const LUX_MAX_ITER: usize = 200;
/// Dyadic levels used when certifying the A_{p(phi)} hypothesis.
const HYPOTHESIS_LEVELS: usize = 8;

/// Standing-hypothesis certificate of a context: phi in class Q and
/// W in A_{p(phi)} (finite estimate, stable under level and grid
/// refinement; out-of-class power weights blow up like a power of the
/// grid size, which the half-grid comparison catches).
#[derive(Debug, Clone, Serialize)]
pub struct HypothesisReport {
    pub indice: f64,
    pub delta2: f64,
    pub theta_qc: Option<f64>,
    pub ap_value: f64,
    pub ap_level_stable: bool,
    pub ap_grid_stable: bool,
    pub satisfied: bool,
}

/// Bundle (phi, W, grid) defining L_W^phi and its norms.
#[derive(Debug, Clone)]
pub struct OrliczContext {
    phi: YoungFunction,
    weight: Weight,
    grid: Grid,
    /// Declared Y[p,q] parameters for the refined inequalities.
    y_class: Option<(f64, f64)>,
    hypothesis: HypothesisReport,
    ap: ApEstimate,
    dual: OnceLock<DualEvaluator>,
}

impl OrliczContext {
    pub fn new(phi: YoungFunction, weight: Weight) -> Result<Self> {
        let grid = weight.grid();
        let p = phi.indice().max(1.0);
        let ap = weight.ap_constant(p, HYPOTHESIS_LEVELS)?;
        let ap_grid_stable = match weight.coarsened() {
            Ok(coarse) => {
                let ap_coarse = coarse.ap_constant(p, HYPOTHESIS_LEVELS)?;
                ap.value <= 1.3 * ap_coarse.value
            }
            // Grid already at the minimum size: accept.
            Err(_) => true,
        };
        let in_q = phi.delta2().is_finite() && phi.theta_qc().is_some();
        let hypothesis = HypothesisReport {
            indice: phi.indice(),
            delta2: phi.delta2(),
            theta_qc: phi.theta_qc(),
            ap_value: ap.value,
            ap_level_stable: ap.level_stable(),
            ap_grid_stable,
            satisfied: in_q && ap.value.is_finite() && ap.level_stable() && ap_grid_stable,
        };
        let y_class = match phi.kind() {
            YoungKind::Power { p } => Some((*p, *p)),
            YoungKind::PowerLog { p } => Some((*p, *p + 0.5)),
            YoungKind::Tabulated { .. } => None,
        };
        Ok(OrliczContext {
            phi,
            weight,
            grid,
            y_class,
            hypothesis,
            ap,
            dual: OnceLock::new(),
        })
    }

    pub fn phi(&self) -> &YoungFunction {
        &self.phi
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn hypothesis(&self) -> &HypothesisReport {
        &self.hypothesis
    }

    pub fn ap_estimate(&self) -> &ApEstimate {
        &self.ap
    }

    /// Declared Y[p,q] parameters, when the built-in kind carries them.
    pub fn y_class(&self) -> Option<(f64, f64)> {
        self.y_class
    }

    pub fn name(&self) -> String {
        format!("{} | {}", self.phi.name(), self.weight.name())
    }

    /// The modular int phi(|f|) W dx.
    pub fn modular(&self, f: &PeriodicFunction) -> Result<f64> {
        modular_with(|x| self.phi.eval(x), self.weight.samples(), f)
    }

    /// Gauge norm inf{tau > 0 : modular(f / tau) <= 1}.
    pub fn luxemburg(&self, f: &PeriodicFunction) -> Result<f64> {
        self.luxemburg_with_hint(f, None)
    }

    /// Gauge norm with a warm-start bracket seed (speeds up sweeps whose
    /// successive calls have nearby norms).
    pub fn luxemburg_with_hint(&self, f: &PeriodicFunction, hint: Option<f64>) -> Result<f64> {
        if let YoungKind::Power { p } = self.phi.kind() {
            // Homogeneous gauge: modular(f/tau) = tau^{-p} modular(f).
            let m = self.modular(f)?;
            return Ok(m.powf(1.0 / *p));
        }
        luxemburg_general(
            |x| self.phi.eval(x),
            self.weight.samples(),
            f,
            hint,
        )
    }

    /// Gauge norm of a polynomial: sample on the grid first.
    pub fn luxemburg_poly(&self, t: &TrigPolynomial) -> Result<f64> {
        self.luxemburg(&t.to_function(self.grid))
    }

    /// Amemiya norm inf_{tau > 0} (1 + modular(tau f)) / tau, equal to the
    /// duality Orlicz norm when phi is convex. The flag in the result is
    /// false when phi is quasiconvex-only and the value is an equivalent
    /// norm rather than the exact duality norm.
    pub fn orlicz_amemiya(&self, f: &PeriodicFunction) -> Result<OrliczNorm> {
        let exact = self.phi.is_convex();
        if let YoungKind::Power { p } = self.phi.kind() {
            let m = self.modular(f)?;
            if m == 0.0 {
                return Ok(OrliczNorm { value: 0.0, exact_orlicz: exact });
            }
            let p = *p;
            let value = p * (p - 1.0).powf((1.0 - p) / p) * m.powf(1.0 / p);
            return Ok(OrliczNorm { value, exact_orlicz: exact });
        }
        let lux = self.luxemburg(f)?;
        if lux == 0.0 {
            return Ok(OrliczNorm { value: 0.0, exact_orlicz: exact });
        }
        let tau_c = 1.0 / lux;
        let objective = |t: f64| -> f64 {
            let tau = t.exp();
            match modular_with(|x| self.phi.eval(x), self.weight.samples(), &f.scale(tau)) {
                Ok(m) => (1.0 + m) / tau,
                Err(_) => f64::INFINITY,
            }
        };
        let (lo, hi) = ((tau_c / 64.0).ln(), (tau_c * 64.0).ln());
        let (_, neg) = crate::numerics::golden_max(|t| -objective(t), lo, hi, 1e-12, 300);
        Ok(OrliczNorm {
            value: -neg,
            exact_orlicz: exact,
        })
    }

    /// Dual gauge norm ||g||_{phi~, W_*}.
    pub fn dual_luxemburg(&self, g: &PeriodicFunction) -> Result<f64> {
        let dual = self.dual_evaluator()?;
        luxemburg_general(|y| dual.eval(y), dual.weight.samples(), g, None)
    }

    /// Ratio int |f g| dx / (||f||_{phi,W} ||g||_{phi~,W_*}); the harness
    /// asserts it stays bounded over a corpus.
    pub fn holder_check(&self, f: &PeriodicFunction, g: &PeriodicFunction) -> Result<f64> {
        let prod = PeriodicFunction::from_samples(
            self.grid,
            f.samples()
                .iter()
                .zip(g.samples())
                .map(|(a, b)| (a * b).abs())
                .collect(),
        )?;
        let lhs = prod.integral();
        let nf = self.luxemburg(f)?;
        let ng = self.dual_luxemburg(g)?;
        if nf == 0.0 || ng == 0.0 {
            return Ok(0.0);
        }
        Ok(lhs / (nf * ng))
    }

    /// Norm chain L^inf -> L_W^phi -> L^v(W) -> L^1 realized on one f.
    pub fn embedding_check(&self, f: &PeriodicFunction) -> Result<EmbeddingReport> {
        let p = self.phi.indice();
        let v = 0.5 * (1.0 + p);
        let l1 = f.abs().integral();
        let lv_w = {
            let pw = PeriodicFunction::from_samples(
                self.grid,
                f.samples().iter().map(|x| x.abs().powf(v)).collect(),
            )?;
            pw.quadrature_weighted(self.weight.samples()).powf(1.0 / v)
        };
        let orlicz = self.luxemburg(f)?;
        let linf = f.max_abs();
        let ratio = |num: f64, den: f64| if den == 0.0 { 0.0 } else { num / den };
        Ok(EmbeddingReport {
            v,
            l1,
            lv_weighted: lv_w,
            orlicz_gauge: orlicz,
            linf,
            c_l1_over_lv: ratio(l1, lv_w),
            c_lv_over_orlicz: ratio(lv_w, orlicz),
            c_orlicz_over_linf: ratio(orlicz, linf),
        })
    }

    fn dual_evaluator(&self) -> Result<&DualEvaluator> {
        if let Some(d) = self.dual.get() {
            return Ok(d);
        }
        let d = DualEvaluator::build(&self.phi, &self.weight)?;
        let _ = self.dual.set(d);
        Ok(self.dual.get().unwrap())
    }
}

/// Amemiya-norm result; `exact_orlicz` is false for quasiconvex-only phi
/// where the value is only an equivalent norm.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct OrliczNorm {
    pub value: f64,
    pub exact_orlicz: bool,
}

/// Embedding-chain report with empirical step constants.
#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingReport {
    pub v: f64,
    pub l1: f64,
    pub lv_weighted: f64,
    pub orlicz_gauge: f64,
    pub linf: f64,
    pub c_l1_over_lv: f64,
    pub c_lv_over_orlicz: f64,
    pub c_orlicz_over_linf: f64,
}

impl EmbeddingReport {
    pub fn chain_finite(&self) -> bool {
        [
            self.c_l1_over_lv,
            self.c_lv_over_orlicz,
            self.c_orlicz_over_linf,
        ]
        .iter()
        .all(|c| c.is_finite())
    }
}

/// One CSV row "function_id,phi,weight,norm_kind,value" for exported norm
/// evaluations.
pub fn norm_csv_row(function_id: &str, ctx: &OrliczContext, norm_kind: &str, value: f64) -> String {
    format!(
        "{},{},{},{},{}\n",
        function_id,
        ctx.phi().name(),
        ctx.weight().name(),
        norm_kind,
        value
    )
}

/// int phi(|f|) W dx by the grid quadrature. Saturation of the Young
/// function at any node is an error.
pub fn modular_with(
    phi: impl Fn(f64) -> f64,
    w_samples: &[f64],
    f: &PeriodicFunction,
) -> Result<f64> {
    let mut acc = 0.0;
    for (x, w) in f.samples().iter().zip(w_samples) {
        let v = phi(x.abs());
        if !v.is_finite() {
            return Err(Error::Saturated(format!(
                "phi({}) is not finite",
                x.abs()
            )));
        }
        acc += v * w;
    }
    Ok(acc * f.grid().step())
}

fn modular_scaled(phi: &impl Fn(f64) -> f64, w: &[f64], f: &[f64], inv_tau: f64, h: f64) -> f64 {
    let mut acc = 0.0;
    for (x, wi) in f.iter().zip(w) {
        acc += phi(x.abs() * inv_tau) * wi;
    }
    acc * h
}

/// Gauge norm for an arbitrary Young-type evaluator and weight samples.
pub fn luxemburg_general(
    phi: impl Fn(f64) -> f64,
    w_samples: &[f64],
    f: &PeriodicFunction,
    hint: Option<f64>,
) -> Result<f64> {
    let seed = f.max_abs();
    if seed == 0.0 {
        return Ok(0.0);
    }
    let h = f.grid().step();
    let fs = f.samples();
    let at = |tau: f64| modular_scaled(&phi, w_samples, fs, 1.0 / tau, h);
    let mut tau = hint.unwrap_or(seed).abs().max(1e-300);
    if !at(tau).is_finite() {
        tau = seed;
    }
    let (mut lo, mut hi);
    if at(tau) <= 1.0 {
        hi = tau;
        lo = tau / 2.0;
        let mut guard = 0;
        while at(lo) <= 1.0 {
            hi = lo;
            lo /= 2.0;
            guard += 1;
            if guard > 2000 || lo < 1e-280 {
                // Modular stays below 1 all the way down: the function is
                // supported on a set of vanishing weight.
                return Ok(0.0);
            }
        }
    } else {
        lo = tau;
        hi = tau * 2.0;
        let mut guard = 0;
        while at(hi) > 1.0 {
            lo = hi;
            hi *= 2.0;
            guard += 1;
            if guard > 2000 || hi > 1e280 {
                return Err(Error::BracketFailure(
                    "modular never drops to 1; f may not lie in L_W^phi at this resolution".into(),
                ));
            }
        }
    }
    let abs_tol = 1e-12 * seed;
    for _ in 0..LUX_MAX_ITER {
        if hi - lo <= LUX_REL_TOL * hi + abs_tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if at(mid) <= 1.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Evaluator for the complementary function of a context's phi together
/// with the dual weight; powers use the closed form, other kinds a
/// precomputed log-log table.
#[derive(Debug, Clone)]
struct DualEvaluator {
    weight: Weight,
    form: DualForm,
}

#[derive(Debug, Clone)]
enum DualForm {
    PowerClosedForm { c: f64, pprime: f64 },
    Table(LogLogTable),
}

impl DualEvaluator {
    fn build(phi: &YoungFunction, weight: &Weight) -> Result<DualEvaluator> {
        let w_star = weight.dual_weight(phi)?;
        let form = match phi.kind() {
            YoungKind::Power { p } => {
                let c = (p - 1.0) / p * p.powf(-1.0 / (p - 1.0));
                DualForm::PowerClosedForm {
                    c,
                    pprime: p / (p - 1.0),
                }
            }
            _ => DualForm::Table(LogLogTable::build(
                |y| complementary_sup(|x| phi.eval(x), y).unwrap_or(f64::INFINITY),
                1e-9,
                1e9,
                2048,
            )),
        };
        Ok(DualEvaluator {
            weight: w_star,
            form,
        })
    }

    fn eval(&self, y: f64) -> f64 {
        let y = y.abs();
        if y == 0.0 {
            return 0.0;
        }
        match &self.form {
            DualForm::PowerClosedForm { c, pprime } => c * y.powf(*pprime),
            DualForm::Table(t) => t.eval(y),
        }
    }
}

/// Piecewise-linear interpolation of log f against log y with power-law
/// extension beyond the table.
#[derive(Debug, Clone)]
struct LogLogTable {
    log_lo: f64,
    step: f64,
    logs: Vec<f64>,
}

impl LogLogTable {
    fn build(f: impl Fn(f64) -> f64, lo: f64, hi: f64, points: usize) -> Self {
        let log_lo = lo.ln();
        let step = (hi.ln() - log_lo) / (points - 1) as f64;
        let logs = (0..points)
            .map(|i| f((log_lo + i as f64 * step).exp()).max(1e-300).ln())
            .collect();
        LogLogTable { log_lo, step, logs }
    }

    fn eval(&self, y: f64) -> f64 {
        let t = (y.ln() - self.log_lo) / self.step;
        let n = self.logs.len();
        let (i, frac) = if t <= 0.0 {
            (0usize, t)
        } else if t >= (n - 1) as f64 {
            (n - 2, t - (n - 2) as f64)
        } else {
            let i = t.floor() as usize;
            (i, t - i as f64)
        };
        let v = self.logs[i] * (1.0 - frac) + self.logs[i + 1] * frac;
        v.exp()
    }
}
