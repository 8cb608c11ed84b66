//! Uniform periodic grids on T = [0, 2pi], Fourier analysis/synthesis,
//! partial sums, conjugates and dyadic frequency blocks.
//!
//! Coefficient convention: with a_j = (1/pi) \int f cos jx dx and
//! b_j = (1/pi) \int f sin jx dx, synthesis reads
//!
//!   f(x) = a_0 / 2 + sum_{j>=1} (a_j cos jx + b_j sin jx),
//!
//! so the j = 0 harmonic A_0(x, f) carries the factor 1/2 and the partial
//! sum operator S_n is a projection.

use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

pub const TWO_PI: f64 = 2.0 * PI;

/// Relative energy above the top-decade cutoff that raises [`AliasRisk`].
const ALIAS_ENERGY_TOL: f64 = 1e-8;

fn fft_cache() -> &'static Mutex<std::collections::HashMap<(usize, bool), Arc<dyn Fft<f64>>>> {
    static CACHE: OnceLock<Mutex<std::collections::HashMap<(usize, bool), Arc<dyn Fft<f64>>>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(std::collections::HashMap::new()))
}

fn plan(n: usize, inverse: bool) -> Arc<dyn Fft<f64>> {
    let mut cache = fft_cache().lock().unwrap();
    cache
        .entry((n, inverse))
        .or_insert_with(|| {
            let mut planner = FftPlanner::new();
            if inverse {
                planner.plan_fft_inverse(n)
            } else {
                planner.plan_fft_forward(n)
            }
        })
        .clone()
}

/// Uniform periodic grid x_i = 2 pi i / n, with n a power of two >= 256.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid {
    n: usize,
}

impl Grid {
    pub fn new(n_nodes: usize) -> Result<Self> {
        if n_nodes < 256 || !n_nodes.is_power_of_two() {
            return Err(Error::InvalidInput(format!(
                "grid size must be a power of two >= 256, got {n_nodes}"
            )));
        }
        Ok(Grid { n: n_nodes })
    }

    /// Default desk-scale grid: 4096 nodes, degrees up to 1024 alias-free.
    pub fn default_grid() -> Self {
        Grid { n: 4096 }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Grid spacing 2 pi / n.
    pub fn step(&self) -> f64 {
        TWO_PI / self.n as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        TWO_PI * (i as f64) / (self.n as f64)
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.node(i))
    }

    /// Largest representable frequency, n/2 - 1 (the Nyquist bin is dropped).
    pub fn max_freq(&self) -> usize {
        self.n / 2 - 1
    }

    /// Degree cap for operator sweeps: one quarter of the grid, leaving
    /// anti-alias headroom.
    pub fn sweep_degree_cap(&self) -> usize {
        self.n / 4
    }
}

/// Cosine/sine coefficient table, indices 0..=jmax (b\[0\] is unused and 0).
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

impl CoeffTable {
    pub fn zeros(jmax: usize) -> Self {
        CoeffTable {
            a: vec![0.0; jmax + 1],
            b: vec![0.0; jmax + 1],
        }
    }

    pub fn jmax(&self) -> usize {
        self.a.len() - 1
    }

    /// Energy of the harmonic j under the L2 inner product (up to pi).
    fn energy(&self, j: usize) -> f64 {
        if j == 0 {
            0.5 * self.a[0] * self.a[0]
        } else {
            self.a[j] * self.a[j] + self.b[j] * self.b[j]
        }
    }
}

/// A real 2pi-periodic function held as samples on a shared grid, with a
/// lazily computed coefficient table.
#[derive(Debug)]
pub struct PeriodicFunction {
    grid: Grid,
    samples: Vec<f64>,
    coeffs: OnceLock<Arc<CoeffTable>>,
}

impl Clone for PeriodicFunction {
    fn clone(&self) -> Self {
        let out = PeriodicFunction {
            grid: self.grid,
            samples: self.samples.clone(),
            coeffs: OnceLock::new(),
        };
        if let Some(c) = self.coeffs.get() {
            let _ = out.coeffs.set(c.clone());
        }
        out
    }
}

impl PeriodicFunction {
    pub fn from_samples(grid: Grid, samples: Vec<f64>) -> Result<Self> {
        if samples.len() != grid.len() {
            return Err(Error::InvalidInput(format!(
                "expected {} samples, got {}",
                grid.len(),
                samples.len()
            )));
        }
        Ok(PeriodicFunction {
            grid,
            samples,
            coeffs: OnceLock::new(),
        })
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> f64) -> Self {
        let samples = grid.nodes().map(f).collect();
        PeriodicFunction {
            grid,
            samples,
            coeffs: OnceLock::new(),
        }
    }

    pub fn constant(grid: Grid, c: f64) -> Self {
        PeriodicFunction {
            grid,
            samples: vec![c; grid.len()],
            coeffs: OnceLock::new(),
        }
    }

    pub fn zero(grid: Grid) -> Self {
        Self::constant(grid, 0.0)
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn mean(&self) -> f64 {
        self.samples.iter().sum::<f64>() / self.samples.len() as f64
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().fold(0.0, |m, &x| m.max(x.abs()))
    }

    pub fn abs(&self) -> PeriodicFunction {
        PeriodicFunction {
            grid: self.grid,
            samples: self.samples.iter().map(|x| x.abs()).collect(),
            coeffs: OnceLock::new(),
        }
    }

    pub fn scale(&self, c: f64) -> PeriodicFunction {
        PeriodicFunction {
            grid: self.grid,
            samples: self.samples.iter().map(|x| c * x).collect(),
            coeffs: OnceLock::new(),
        }
    }

    pub fn add(&self, other: &PeriodicFunction) -> PeriodicFunction {
        debug_assert_eq!(self.grid, other.grid);
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(x, y)| x + y)
            .collect();
        PeriodicFunction {
            grid: self.grid,
            samples,
            coeffs: OnceLock::new(),
        }
    }

    pub fn sub(&self, other: &PeriodicFunction) -> PeriodicFunction {
        self.add(&other.scale(-1.0))
    }

    /// Full coefficient table up to the grid's maximum frequency (cached).
    pub fn coeffs(&self) -> Arc<CoeffTable> {
        self.coeffs
            .get_or_init(|| Arc::new(analyze(self.grid, &self.samples, self.grid.max_freq())))
            .clone()
    }

    /// Coefficients a_j, b_j for j <= jmax.
    pub fn fourier_coeffs(&self, jmax: usize) -> Result<CoeffTable> {
        if jmax > self.grid.max_freq() {
            return Err(Error::InvalidInput(format!(
                "jmax {} exceeds grid max frequency {}",
                jmax,
                self.grid.max_freq()
            )));
        }
        let full = self.coeffs();
        Ok(CoeffTable {
            a: full.a[..=jmax].to_vec(),
            b: full.b[..=jmax].to_vec(),
        })
    }

    /// True when more than a 1e-8 fraction of the spectral energy sits in
    /// the top decade of representable frequencies: the samples are then
    /// suspected of aliasing.
    pub fn alias_risk(&self) -> bool {
        let c = self.coeffs();
        let jmax = c.jmax();
        let cutoff = jmax - jmax / 10;
        let mut total = 0.0;
        let mut top = 0.0;
        for j in 0..=jmax {
            let e = c.energy(j);
            total += e;
            if j >= cutoff {
                top += e;
            }
        }
        total > 0.0 && top / total > ALIAS_ENERGY_TOL
    }

    /// Partial Fourier sum S_n(f) as a trigonometric polynomial.
    pub fn partial_sum(&self, n: usize) -> Result<TrigPolynomial> {
        if n > self.grid.max_freq() {
            return Err(Error::InvalidInput(format!(
                "partial sum degree {} exceeds grid max frequency {}",
                n,
                self.grid.max_freq()
            )));
        }
        let full = self.coeffs();
        Ok(TrigPolynomial {
            a: full.a[..=n].to_vec(),
            b: full.b[..=n].to_vec(),
        })
    }

    /// Conjugate function via the coefficient swap applied to every
    /// representable harmonic.
    pub fn conjugate(&self) -> PeriodicFunction {
        let t = TrigPolynomial {
            a: self.coeffs().a.clone(),
            b: self.coeffs().b.clone(),
        };
        t.conjugate().to_function(self.grid)
    }

    /// Dyadic Littlewood-Paley blocks l = 0..=lmax.
    ///
    /// Block 0 holds the j = 0 harmonic alone; block l >= 1 holds
    /// frequencies 2^{l-1}..=2^l - 1, so together the blocks partition
    /// 0..2^lmax - 1.
    pub fn lp_blocks(&self, lmax: usize) -> Result<Vec<TrigPolynomial>> {
        let top = 1usize << lmax;
        if top - 1 > self.grid.max_freq() {
            return Err(Error::InvalidInput(format!(
                "l_max {} needs frequencies up to {} > grid max {}",
                lmax,
                top - 1,
                self.grid.max_freq()
            )));
        }
        let full = self.coeffs();
        let mut blocks = Vec::with_capacity(lmax + 1);
        // l = 0: the mean term.
        let mut b0 = TrigPolynomial::zeros(0);
        b0.a[0] = full.a[0];
        blocks.push(b0);
        for l in 1..=lmax {
            let lo = 1usize << (l - 1);
            let hi = (1usize << l) - 1;
            let mut t = TrigPolynomial::zeros(hi);
            for j in lo..=hi {
                t.a[j] = full.a[j];
                t.b[j] = full.b[j];
            }
            blocks.push(t);
        }
        Ok(blocks)
    }

    /// Weighted trapezoidal quadrature (2pi/n) sum f(x_i) w(x_i); exact for
    /// band-limited integrands on the uniform periodic grid.
    pub fn quadrature_weighted(&self, w_samples: &[f64]) -> f64 {
        debug_assert_eq!(self.samples.len(), w_samples.len());
        let s: f64 = self
            .samples
            .iter()
            .zip(w_samples)
            .map(|(f, w)| f * w)
            .sum();
        s * self.grid.step()
    }

    /// Unweighted integral over T.
    pub fn integral(&self) -> f64 {
        self.samples.iter().sum::<f64>() * self.grid.step()
    }

    /// Export as two-column CSV "x,f(x)" rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.samples.len() * 24);
        for (i, s) in self.samples.iter().enumerate() {
            out.push_str(&format!("{},{}\n", self.grid.node(i), s));
        }
        out
    }

    /// Import from two-column CSV sampled on a uniform periodic grid over
    /// [0, 2pi). The input is resampled onto `grid` by trigonometric
    /// interpolation truncated at degree grid.len()/4.
    pub fn from_csv(grid: Grid, text: &str) -> Result<Self> {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split(',');
            let x: f64 = parts
                .next()
                .ok_or_else(|| Error::InvalidInput(format!("line {}: missing x", lineno + 1)))?
                .trim()
                .parse()
                .map_err(|e| Error::InvalidInput(format!("line {}: {}", lineno + 1, e)))?;
            let y: f64 = parts
                .next()
                .ok_or_else(|| Error::InvalidInput(format!("line {}: missing f(x)", lineno + 1)))?
                .trim()
                .parse()
                .map_err(|e| Error::InvalidInput(format!("line {}: {}", lineno + 1, e)))?;
            xs.push(x);
            ys.push(y);
        }
        if xs.len() < 4 {
            return Err(Error::InvalidInput("need at least 4 samples".into()));
        }
        let m = xs.len();
        let step = TWO_PI / m as f64;
        for (i, &x) in xs.iter().enumerate() {
            if (x - i as f64 * step).abs() > 1e-9 * TWO_PI {
                return Err(Error::InvalidInput(
                    "input nodes must form a uniform grid x_i = 2 pi i / m over [0, 2 pi)".into(),
                ));
            }
        }
        // Analyze on the native resolution, truncate, resample.
        let jin = m / 2 - 1;
        let table = analyze_raw(&ys, jin);
        let degree = jin.min(grid.sweep_degree_cap());
        let t = TrigPolynomial {
            a: table.a[..=degree].to_vec(),
            b: table.b[..=degree].to_vec(),
        };
        Ok(t.to_function(grid))
    }
}

/// Real trigonometric polynomial of some degree n, stored as coefficient
/// arrays a[0..=n], b[0..=n] (b\[0\] unused). The constant term is a\[0\]/2.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPolynomial {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

impl TrigPolynomial {
    pub fn zeros(degree: usize) -> Self {
        TrigPolynomial {
            a: vec![0.0; degree + 1],
            b: vec![0.0; degree + 1],
        }
    }

    pub fn from_coeffs(a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        if a.len() != b.len() || a.is_empty() {
            return Err(Error::InvalidInput(
                "coefficient arrays must be non-empty and of equal length".into(),
            ));
        }
        Ok(TrigPolynomial { a, b })
    }

    /// cos(jx) as a polynomial of degree j.
    pub fn cosine(j: usize) -> Self {
        let mut t = TrigPolynomial::zeros(j);
        if j == 0 {
            t.a[0] = 2.0; // a0/2 = 1
        } else {
            t.a[j] = 1.0;
        }
        t
    }

    /// sin(jx), j >= 1.
    pub fn sine(j: usize) -> Self {
        let mut t = TrigPolynomial::zeros(j.max(1));
        t.b[j] = 1.0;
        t
    }

    pub fn degree(&self) -> usize {
        self.a.len() - 1
    }

    pub fn mean(&self) -> f64 {
        self.a[0] / 2.0
    }

    pub fn eval(&self, x: f64) -> f64 {
        let mut s = self.a[0] / 2.0;
        for j in 1..self.a.len() {
            let (sj, cj) = (j as f64 * x).sin_cos();
            s += self.a[j] * cj + self.b[j] * sj;
        }
        s
    }

    pub fn scale(&self, c: f64) -> TrigPolynomial {
        TrigPolynomial {
            a: self.a.iter().map(|x| c * x).collect(),
            b: self.b.iter().map(|x| c * x).collect(),
        }
    }

    pub fn add(&self, other: &TrigPolynomial) -> TrigPolynomial {
        let n = self.degree().max(other.degree());
        let mut t = TrigPolynomial::zeros(n);
        for j in 0..=n {
            if j <= self.degree() {
                t.a[j] += self.a[j];
                t.b[j] += self.b[j];
            }
            if j <= other.degree() {
                t.a[j] += other.a[j];
                t.b[j] += other.b[j];
            }
        }
        t
    }

    pub fn sub(&self, other: &TrigPolynomial) -> TrigPolynomial {
        self.add(&other.scale(-1.0))
    }

    /// Conjugate polynomial: a_j cos jx + b_j sin jx -> a_j sin jx - b_j cos jx,
    /// constant term dropped.
    pub fn conjugate(&self) -> TrigPolynomial {
        let n = self.degree();
        let mut t = TrigPolynomial::zeros(n.max(1));
        for j in 1..=n {
            t.a[j] = -self.b[j];
            t.b[j] = self.a[j];
        }
        t
    }

    /// Weyl fractional derivative of order alpha >= 0: frequency gain j^alpha
    /// and phase shift alpha pi / 2. Order 0 is the identity; positive
    /// orders drop the mean.
    pub fn weyl_derivative(&self, alpha: f64) -> TrigPolynomial {
        assert!(alpha >= 0.0, "weyl derivative needs alpha >= 0");
        if alpha == 0.0 {
            return self.clone();
        }
        let theta = alpha * PI / 2.0;
        let (st, ct) = theta.sin_cos();
        let n = self.degree();
        let mut t = TrigPolynomial::zeros(n.max(1));
        for j in 1..=n {
            let gain = (j as f64).powf(alpha);
            t.a[j] = gain * (self.a[j] * ct + self.b[j] * st);
            t.b[j] = gain * (-self.a[j] * st + self.b[j] * ct);
        }
        t
    }

    /// Sample on the grid via inverse FFT.
    pub fn to_function(&self, grid: Grid) -> PeriodicFunction {
        let n = grid.len();
        assert!(
            self.degree() <= grid.max_freq(),
            "polynomial degree {} exceeds grid max frequency {}",
            self.degree(),
            grid.max_freq()
        );
        let mut spec = vec![Complex64::new(0.0, 0.0); n];
        let nf = n as f64;
        spec[0] = Complex64::new(nf * self.a[0] / 2.0, 0.0);
        for j in 1..=self.degree() {
            let re = 0.5 * nf * self.a[j];
            let im = -0.5 * nf * self.b[j];
            spec[j] = Complex64::new(re, im);
            spec[n - j] = Complex64::new(re, -im);
        }
        plan(n, true).process(&mut spec);
        let samples = spec.iter().map(|z| z.re / nf).collect();
        PeriodicFunction {
            grid,
            samples,
            coeffs: OnceLock::new(),
        }
    }

    /// L1 mass of the coefficient table, sum_j (|a_j| + |b_j|) with the
    /// mean counted as |a_0|/2; bounds the sup norm of the polynomial.
    pub fn coeff_l1(&self) -> f64 {
        let mut s = self.a[0].abs() / 2.0;
        for j in 1..self.a.len() {
            s += self.a[j].abs() + self.b[j].abs();
        }
        s
    }
}

fn analyze(grid: Grid, samples: &[f64], jmax: usize) -> CoeffTable {
    debug_assert_eq!(grid.len(), samples.len());
    analyze_raw(samples, jmax)
}

fn analyze_raw(samples: &[f64], jmax: usize) -> CoeffTable {
    let n = samples.len();
    let mut spec: Vec<Complex64> = samples.iter().map(|&s| Complex64::new(s, 0.0)).collect();
    plan(n, false).process(&mut spec);
    let nf = n as f64;
    let mut table = CoeffTable::zeros(jmax);
    table.a[0] = 2.0 * spec[0].re / nf;
    for j in 1..=jmax {
        table.a[j] = 2.0 * spec[j].re / nf;
        table.b[j] = -2.0 * spec[j].im / nf;
    }
    table
}
