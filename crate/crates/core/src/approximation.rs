//! Best and near-best trigonometric approximation, the Peetre K-functional
//! over a polynomial candidate family, and the realization functional.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::norms::OrliczContext;
use crate::operators::weyl_derivative;
use crate::periodic::{PeriodicFunction, TrigPolynomial};

/// Degree cap for the subgradient optimizer.
pub const BEST_APPROX_DEGREE_CAP: usize = 32;
const OPT_MAX_ITER: usize = 400;
const OPT_RESTARTS: usize = 3;
const OPT_TOL: f64 = 1e-7;

/// Outcome of the best-approximation search.
#[derive(Debug, Clone, Serialize)]
pub struct BestApproxResult {
    pub n: usize,
    pub value: f64,
    #[serde(skip)]
    pub argmin: TrigPolynomial,
    pub iterations: usize,
    pub restarts: usize,
    pub converged: bool,
}

/// Near-best polynomial t_n^*(f) = S_n f; the partial sum is uniformly
/// bounded on L_W^phi, so its error is within a constant of E_n(f).
pub fn near_best(f: &PeriodicFunction, n: usize) -> Result<TrigPolynomial> {
    f.partial_sum(n)
}

/// Gauge-norm error of the near-best polynomial, ||f - S_n f||.
pub fn near_best_error(ctx: &OrliczContext, f: &PeriodicFunction, n: usize) -> Result<f64> {
    let s = near_best(f, n)?.to_function(ctx.grid());
    ctx.luxemburg(&f.sub(&s))
}

/// E_n(f) by minimizing the gauge norm over the 2n+1 coefficients of a
/// degree-n polynomial: projected subgradient descent with diminishing
/// steps, seeded at S_n f, with random restarts. The objective is convex
/// (norm of an affine map), so the best visited value converges to the
/// global optimum; the result never exceeds the near-best seed.
pub fn best_approx(
    ctx: &OrliczContext,
    f: &PeriodicFunction,
    n: usize,
    seed: u64,
) -> Result<BestApproxResult> {
    if n > BEST_APPROX_DEGREE_CAP {
        return Err(Error::InvalidInput(format!(
            "optimizer degree cap is {BEST_APPROX_DEGREE_CAP}, got {n}"
        )));
    }
    let grid = ctx.grid();
    let start = near_best(f, n)?;
    let dim = 2 * n + 1;
    let pack = |t: &TrigPolynomial| -> Vec<f64> {
        let mut v = Vec::with_capacity(dim);
        v.extend_from_slice(&t.a);
        v.extend_from_slice(&t.b[1..]);
        v
    };
    let unpack = |v: &[f64]| -> TrigPolynomial {
        let mut t = TrigPolynomial::zeros(n);
        t.a.copy_from_slice(&v[..=n]);
        if n >= 1 {
            t.b[1..].copy_from_slice(&v[n + 1..]);
        }
        t
    };
    let objective = |v: &[f64]| -> Result<f64> {
        let t = unpack(v);
        ctx.luxemburg(&f.sub(&t.to_function(grid)))
    };

    let x0 = pack(&start);
    let f0 = objective(&x0)?;
    let mut best_x = x0.clone();
    let mut best_f = f0;
    let scale = f0.max(1e-12);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total_iter = 0usize;
    let mut converged = false;

    for restart in 0..=OPT_RESTARTS {
        let mut x = if restart == 0 {
            x0.clone()
        } else {
            x0.iter()
                .map(|&c| c + 0.05 * scale * rng.gen_range(-1.0..1.0))
                .collect()
        };
        let mut fx = objective(&x)?;
        if fx < best_f {
            best_f = fx;
            best_x = x.clone();
        }
        let mut stall = 0usize;
        let fd = 1e-6 * scale.max(1e-9);
        for it in 0..OPT_MAX_ITER {
            total_iter += 1;
            // Central-difference subgradient.
            let mut g = vec![0.0; dim];
            let mut gnorm2 = 0.0;
            for d in 0..dim {
                let keep = x[d];
                x[d] = keep + fd;
                let fp = objective(&x)?;
                x[d] = keep - fd;
                let fm = objective(&x)?;
                x[d] = keep;
                g[d] = (fp - fm) / (2.0 * fd);
                gnorm2 += g[d] * g[d];
            }
            let gnorm = gnorm2.sqrt();
            if gnorm < 1e-14 {
                converged = true;
                break;
            }
            let step = 0.1 * scale / (1.0 + it as f64).sqrt();
            for d in 0..dim {
                x[d] -= step * g[d] / gnorm;
            }
            fx = objective(&x)?;
            if fx < best_f - OPT_TOL * scale * 1e-3 {
                best_f = fx;
                best_x = x.clone();
                stall = 0;
            } else {
                if fx < best_f {
                    best_f = fx;
                    best_x = x.clone();
                }
                stall += 1;
            }
            if stall > 30 || best_f <= OPT_TOL * scale * 1e-6 {
                converged = true;
                break;
            }
        }
    }
    Ok(BestApproxResult {
        n,
        value: best_f,
        argmin: unpack(&best_x),
        iterations: total_iter,
        restarts: OPT_RESTARTS,
        converged,
    })
}

/// Candidate family for the K-functional: partial sums at half-octave
/// degrees (dyadic plus the 3*2^j midpoints; dyadic alone makes the
/// infimum wobble log-periodically against 1/t sweeps) plus de la Vallee
/// Poussin means V_m f = (1/(m+1)) sum_{j=m}^{2m} S_j f.
fn k_candidates(f: &PeriodicFunction, max_degree: usize) -> Result<Vec<TrigPolynomial>> {
    let mut degrees = vec![0usize];
    let mut m = 1usize;
    while m <= max_degree {
        degrees.push(m);
        if m >= 2 && 3 * m / 2 <= max_degree {
            degrees.push(3 * m / 2);
        }
        m *= 2;
    }
    degrees.sort_unstable();
    degrees.dedup();
    let mut out = Vec::new();
    for &m in &degrees {
        out.push(f.partial_sum(m)?);
        if m >= 1 && 2 * m <= f.grid().max_freq() {
            let mut acc = TrigPolynomial::zeros(2 * m);
            for j in m..=2 * m {
                acc = acc.add(&f.partial_sum(j)?);
            }
            out.push(acc.scale(1.0 / (m + 1) as f64));
        }
    }
    Ok(out)
}

/// Precomputed per-candidate norms so that K_l(f, t) can be queried at
/// many t without re-evaluating the family.
pub struct KFunctionalTable {
    pub l: f64,
    degrees: Vec<usize>,
    errs: Vec<f64>,
    dnorms: Vec<f64>,
}

impl KFunctionalTable {
    pub fn new(ctx: &OrliczContext, f: &PeriodicFunction, l: f64) -> Result<Self> {
        assert!(l > 0.0);
        let grid = ctx.grid();
        let max_degree = grid.sweep_degree_cap();
        let mut degrees = Vec::new();
        let mut errs = Vec::new();
        let mut dnorms = Vec::new();
        for cand in k_candidates(f, max_degree)? {
            let g = cand.to_function(grid);
            degrees.push(cand.degree());
            errs.push(ctx.luxemburg(&f.sub(&g))?);
            dnorms.push(ctx.luxemburg(&cand.weyl_derivative(l).to_function(grid))?);
        }
        Ok(KFunctionalTable {
            l,
            degrees,
            errs,
            dnorms,
        })
    }

    /// inf over the family of ||f - g|| + t^l ||g^{(l)}||; returns the
    /// value and the winning candidate degree.
    pub fn query(&self, t: f64) -> (f64, usize) {
        assert!(t > 0.0);
        let tl = t.powf(self.l);
        let mut best = f64::INFINITY;
        let mut deg = 0usize;
        for i in 0..self.errs.len() {
            let v = self.errs[i] + tl * self.dnorms[i];
            if v < best {
                best = v;
                deg = self.degrees[i];
            }
        }
        (best, deg)
    }
}

/// Approximate Peetre K-functional
/// K_l(f, t) = inf_g { ||f - g|| + t^l ||g^{(l)}|| } over the polynomial
/// candidate family. Returns (value, winning candidate degree).
pub fn k_functional(
    ctx: &OrliczContext,
    f: &PeriodicFunction,
    l: f64,
    t: f64,
) -> Result<(f64, usize)> {
    Ok(KFunctionalTable::new(ctx, f, l)?.query(t))
}

/// Best-approximation sweep as CSV rows "n,E_n,gap_to_near_best".
pub fn best_approx_sweep_csv(
    ctx: &OrliczContext,
    f: &PeriodicFunction,
    n_list: &[usize],
    seed: u64,
) -> Result<String> {
    let mut out = String::from("n,E_n,gap_to_near_best\n");
    for &n in n_list {
        let en = best_approx(ctx, f, n, seed)?.value;
        let near = near_best_error(ctx, f, n)?;
        out.push_str(&format!("{},{},{}\n", n, en, near - en));
    }
    Ok(out)
}

/// Realization functional R_{2k}(f, 1/n) = ||f - S_n f|| + n^{-2k}
/// ||(S_n f)^{(2k)}||.
pub fn realization(ctx: &OrliczContext, f: &PeriodicFunction, k: f64, n: usize) -> Result<f64> {
    assert!(k > 0.0 && n >= 1);
    let grid = ctx.grid();
    let t = near_best(f, n)?;
    let err = ctx.luxemburg(&f.sub(&t.to_function(grid)))?;
    let deriv = weyl_derivative(&t.to_function(grid), 2.0 * k);
    let dnorm = ctx.luxemburg(&deriv)?;
    Ok(err + (n as f64).powf(-2.0 * k) * dnorm)
}
