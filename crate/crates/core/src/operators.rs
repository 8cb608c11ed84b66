//! Steklov averages and their fractional powers, moduli of smoothness,
//! Weyl derivatives, Marcinkiewicz multipliers, square functions and the
//! transference functional.
//!
//! Every operator here acts on the band-limited representative of its
//! input (frequencies up to the grid maximum) through a frequency-wise
//! multiplier; the Steklov average of width h multiplies the j-th
//! harmonic by sinc(j h / 2).

use rustfft::num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::norms::OrliczContext;
use crate::periodic::{CoeffTable, PeriodicFunction, TrigPolynomial};

/// Number of h-samples used for the sup in the modulus of smoothness.
pub const MODULUS_H_SAMPLES: usize = 32;
/// The h-grid spans [delta / MODULUS_H_SPAN, delta].
pub const MODULUS_H_SPAN: f64 = 64.0;

pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-8 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// Apply a frequency-wise multiplier to the band-limited representative.
fn apply_multiplier(f: &PeriodicFunction, m: impl Fn(usize) -> f64) -> PeriodicFunction {
    let table = f.coeffs();
    let jmax = table.jmax();
    let mut a = Vec::with_capacity(jmax + 1);
    let mut b = Vec::with_capacity(jmax + 1);
    for j in 0..=jmax {
        let mj = m(j);
        a.push(mj * table.a[j]);
        b.push(mj * table.b[j]);
    }
    TrigPolynomial { a, b }.to_function(f.grid())
}

/// Steklov average A_h f = (1/h) int_{-h/2}^{h/2} f(. + t) dt, realized as
/// the multiplier sinc(j h / 2). The mean is preserved.
pub fn steklov(f: &PeriodicFunction, h: f64) -> PeriodicFunction {
    assert!(h > 0.0 && h <= crate::periodic::TWO_PI);
    apply_multiplier(f, |j| sinc(j as f64 * h / 2.0))
}

/// Two-sided Steklov mean (1/2h) int_{-h}^{h} f(. + t) dt; equals the
/// width-2h average A_{2h}.
pub fn steklov_gadjieva(f: &PeriodicFunction, h: f64) -> PeriodicFunction {
    assert!(h > 0.0 && h <= std::f64::consts::PI);
    apply_multiplier(f, |j| sinc(j as f64 * h))
}

/// j-fold Steklov power (A_h)^j via frequency-wise exponentiation.
pub fn steklov_power(f: &PeriodicFunction, h: f64, j: usize) -> PeriodicFunction {
    if j == 0 {
        return f.clone();
    }
    apply_multiplier(f, |freq| sinc(freq as f64 * h / 2.0).powi(j as i32))
}

/// Signed fractional binomial coefficients of (1 - z)^k:
/// c_j = (-1)^j Gamma(k+1) / (Gamma(j+1) Gamma(k-j+1)), computed by the
/// log-space recurrence c_{j+1} = c_j (j - k)/(j + 1) with sign tracking.
pub fn frac_binomial_coeffs(k: f64, terms: usize) -> Vec<f64> {
    assert!(k > 0.0);
    let mut out = Vec::with_capacity(terms);
    if terms == 0 {
        return out;
    }
    out.push(1.0);
    let mut log_mag = 0.0f64;
    let mut sign = 1.0f64;
    for j in 0..terms - 1 {
        let jf = j as f64;
        let factor = jf - k;
        if factor == 0.0 {
            // Integer k: all later coefficients vanish exactly.
            out.resize(terms, 0.0);
            return out;
        }
        log_mag += factor.abs().ln() - (jf + 1.0).ln();
        if factor < 0.0 {
            sign = -sign;
        }
        out.push(sign * log_mag.exp());
    }
    out
}

/// Sum of |c_j| over j >= terms. For j past k the coefficients share one
/// sign and telescope against the zero total sum, so the tail equals the
/// absolute value of the retained partial sum.
pub fn frac_binomial_tail(k: f64, terms: usize) -> f64 {
    assert!(terms as f64 >= k + 1.0, "tail formula needs terms >= k + 1");
    let coeffs = frac_binomial_coeffs(k, terms);
    coeffs.iter().sum::<f64>().abs()
}

/// Truncated binomial series for (I - A_h)^k f with J terms. Returns the
/// function together with the coefficient tail sum_{j >= J} |c_j|; the
/// node-wise truncation error is bounded by that tail times the
/// coefficient L1 mass of f.
pub fn frac_smooth_series(
    f: &PeriodicFunction,
    h: f64,
    k: f64,
    terms: usize,
) -> Result<(PeriodicFunction, f64)> {
    if k <= 0.0 {
        return Err(Error::InvalidInput("fractional order k must be positive".into()));
    }
    let min_terms = k.ceil() as usize + 1;
    if terms < min_terms {
        return Err(Error::InvalidInput(format!(
            "need at least ceil(k)+1 = {min_terms} terms"
        )));
    }
    let coeffs = frac_binomial_coeffs(k, terms);
    let tail = frac_binomial_tail(k, terms);
    let out = apply_multiplier(f, |j| {
        let s = sinc(j as f64 * h / 2.0);
        // Horner-style accumulation of sum_i c_i s^i.
        let mut acc = 0.0;
        for c in coeffs.iter().rev() {
            acc = acc * s + c;
        }
        acc
    });
    Ok((out, tail))
}

/// Closed multiplier form of (I - A_h)^k: frequency-wise (1 - sinc(jh/2))^k;
/// exact on band-limited functions.
pub fn frac_smooth_multiplier(f: &PeriodicFunction, h: f64, k: f64) -> PeriodicFunction {
    assert!(k > 0.0);
    apply_multiplier(f, |j| {
        let s = 1.0 - sinc(j as f64 * h / 2.0);
        // 1 - sinc is nonnegative; guard the tiny negative rounding at j=0.
        s.max(0.0).powf(k)
    })
}

/// Weighted modulus of smoothness of fractional order k: the sup over a
/// geometric h-grid in (0, delta] of the gauge norm of (I - A_h)^k f.
/// Returns the value and the h attaining it. Order 0 is the norm itself.
pub fn modulus(
    ctx: &OrliczContext,
    f: &PeriodicFunction,
    k: f64,
    delta: f64,
    m_h: usize,
) -> Result<(f64, f64)> {
    if k == 0.0 {
        return Ok((ctx.luxemburg(f)?, delta));
    }
    assert!(delta > 0.0);
    let m_h = m_h.max(8);
    let mut best = (0.0f64, delta);
    let mut hint = None;
    for i in 0..m_h {
        let t = i as f64 / (m_h - 1) as f64;
        let h = delta / MODULUS_H_SPAN.powf(1.0 - t);
        let g = frac_smooth_multiplier(f, h, k);
        let norm = ctx.luxemburg_with_hint(&g, hint)?;
        hint = Some(norm.max(1e-12));
        if norm > best.0 {
            best = (norm, h);
        }
    }
    Ok(best)
}

/// Weyl fractional derivative on the band-limited representative.
pub fn weyl_derivative(f: &PeriodicFunction, alpha: f64) -> PeriodicFunction {
    let table = f.coeffs();
    let t = TrigPolynomial {
        a: table.a.clone(),
        b: table.b.clone(),
    };
    t.weyl_derivative(alpha).to_function(f.grid())
}

/// A bounded multiplier sequence with dyadic-block bounded variation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultiplierSequence {
    pub lambda: Vec<f64>,
    /// Declared Marcinkiewicz bound: |lambda_l| <= A and the variation over
    /// every dyadic block is <= A.
    pub bound: f64,
}

impl MultiplierSequence {
    /// Build with the bound computed from the values themselves.
    pub fn new_auto(lambda: Vec<f64>) -> Self {
        let bound = Self::required_bound(&lambda);
        MultiplierSequence { lambda, bound }
    }

    /// Build with a declared bound; fails when the values violate it.
    pub fn with_bound(lambda: Vec<f64>, bound: f64) -> Result<Self> {
        let seq = MultiplierSequence { lambda, bound };
        seq.certify()?;
        Ok(seq)
    }

    /// Smallest A for which the sequence satisfies the certificate.
    pub fn required_bound(lambda: &[f64]) -> f64 {
        let mut a = lambda.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
        let mut block = 0usize;
        loop {
            let lo = 1usize << block;
            let hi = (1usize << (block + 1)) - 1;
            if lo >= lambda.len() {
                break;
            }
            let mut var = 0.0;
            for l in lo..=hi.min(lambda.len().saturating_sub(2)) {
                var += (lambda[l] - lambda[l + 1]).abs();
            }
            a = a.max(var);
            block += 1;
        }
        a
    }

    /// Check the declared bound: |lambda_l| <= A and per-block variation
    /// sum_{l=2^{m-1}}^{2^m - 1} |lambda_l - lambda_{l+1}| <= A.
    pub fn certify(&self) -> Result<()> {
        let required = Self::required_bound(&self.lambda);
        if required > self.bound * (1.0 + 1e-12) {
            return Err(Error::VariationBoundViolated(format!(
                "sequence needs A >= {required}, declared {}",
                self.bound
            )));
        }
        Ok(())
    }

    /// Import from two-column CSV "j,lambda_j" (j must be 0,1,2,... dense).
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lambda = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split(',');
            let j: usize = parts
                .next()
                .ok_or_else(|| Error::InvalidInput(format!("line {}: missing j", lineno + 1)))?
                .trim()
                .parse()
                .map_err(|e| Error::InvalidInput(format!("line {}: {}", lineno + 1, e)))?;
            if j != lambda.len() {
                return Err(Error::InvalidInput(format!(
                    "line {}: indices must be dense from 0",
                    lineno + 1
                )));
            }
            let v: f64 = parts
                .next()
                .ok_or_else(|| Error::InvalidInput(format!("line {}: missing value", lineno + 1)))?
                .trim()
                .parse()
                .map_err(|e| Error::InvalidInput(format!("line {}: {}", lineno + 1, e)))?;
            lambda.push(v);
        }
        Ok(Self::new_auto(lambda))
    }
}

/// Apply a certified multiplier sequence frequency-wise (missing entries
/// act as zero).
pub fn multiplier_apply(
    f: &PeriodicFunction,
    lam: &MultiplierSequence,
) -> Result<PeriodicFunction> {
    lam.certify()?;
    Ok(apply_multiplier(f, |j| {
        lam.lambda.get(j).copied().unwrap_or(0.0)
    }))
}

/// Node-wise square function (sum_l |nabla_l|^2)^{1/2} over the dyadic
/// blocks l = 0..=lmax.
pub fn square_function(f: &PeriodicFunction, lmax: usize) -> Result<PeriodicFunction> {
    let blocks = f.lp_blocks(lmax)?;
    let grid = f.grid();
    let mut acc = vec![0.0f64; grid.len()];
    for blk in &blocks {
        let g = blk.to_function(grid);
        for (a, s) in acc.iter_mut().zip(g.samples()) {
            *a += s * s;
        }
    }
    PeriodicFunction::from_samples(grid, acc.into_iter().map(f64::sqrt).collect())
}

/// Transference functional Xi_{f,G}(u) = int f(x + u) |G(x)| dx via
/// circular correlation (fast transform).
pub fn transference_xi(f: &PeriodicFunction, g: &PeriodicFunction) -> PeriodicFunction {
    let grid = f.grid();
    let n = grid.len();
    let mut ff: Vec<Complex64> = f.samples().iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let mut gg: Vec<Complex64> = g
        .samples()
        .iter()
        .map(|&x| Complex64::new(x.abs(), 0.0))
        .collect();
    let mut planner = rustfft::FftPlanner::new();
    let fwd = planner.plan_fft_forward(n);
    fwd.process(&mut ff);
    fwd.process(&mut gg);
    let mut prod: Vec<Complex64> = ff
        .iter()
        .zip(&gg)
        .map(|(a, b)| a * b.conj())
        .collect();
    planner.plan_fft_inverse(n).process(&mut prod);
    let scale = grid.step() / n as f64;
    let samples = prod.iter().map(|z| z.re * scale).collect();
    PeriodicFunction::from_samples(grid, samples).expect("length preserved")
}

/// Multiplier data recorded for a fractional smoothing step.
#[derive(Debug, Clone, Serialize)]
pub struct SmoothnessParams {
    pub k: f64,
    pub h: f64,
    pub series_terms: usize,
    pub tail_bound: f64,
}

impl SmoothnessParams {
    /// Pick the truncation so that the coefficient tail drops below
    /// `tol`, capped at `max_terms`.
    pub fn for_tolerance(k: f64, h: f64, tol: f64, max_terms: usize) -> Self {
        let mut terms = (k.ceil() as usize + 2).max(4);
        while terms < max_terms && frac_binomial_tail(k, terms) > tol {
            terms = (terms * 2).min(max_terms);
        }
        SmoothnessParams {
            k,
            h,
            series_terms: terms,
            tail_bound: frac_binomial_tail(k, terms),
        }
    }
}

/// Multiplier realization of conjugation applied to all representable
/// harmonics (delegates to the polynomial coefficient swap).
pub fn conjugate_fn(f: &PeriodicFunction) -> PeriodicFunction {
    f.conjugate()
}

/// Expose the full coefficient table of the band-limited representative.
pub fn coeff_table(f: &PeriodicFunction) -> CoeffTable {
    (*f.coeffs()).clone()
}
