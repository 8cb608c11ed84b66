//! Small scalar search routines shared across modules.

/// Golden-section maximization of a unimodal function on [a, b].
///
/// Returns (argmax, max). Tolerance is on the argument.
pub fn golden_max(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, max_iter: usize) -> (f64, f64) {
    debug_assert!(b >= a);
    const INVPHI: f64 = 0.618_033_988_749_894_9;
    const INVPHI2: f64 = 0.381_966_011_250_105_1;
    let (mut lo, mut hi) = (a, b);
    let mut x1 = lo + INVPHI2 * (hi - lo);
    let mut x2 = lo + INVPHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..max_iter {
        if hi - lo <= tol {
            break;
        }
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = lo + INVPHI2 * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INVPHI * (hi - lo);
            f2 = f(x2);
        }
    }
    let xm = 0.5 * (lo + hi);
    let fm = f(xm);
    if f1 >= f2 && f1 >= fm {
        (x1, f1)
    } else if f2 >= f1 && f2 >= fm {
        (x2, f2)
    } else {
        (xm, fm)
    }
}

/// Golden-section minimization; thin wrapper over [`golden_max`].
pub fn golden_min(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    max_iter: usize,
) -> (f64, f64) {
    let (x, fneg) = golden_max(|t| -f(t), a, b, tol, max_iter);
    (x, -fneg)
}

/// Least-squares slope of y against x. Returns 0 for fewer than two points.
pub fn ls_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len();
    if n < 2 {
        return 0.0;
    }
    let nf = n as f64;
    let mx = xs.iter().sum::<f64>() / nf;
    let my = ys.iter().sum::<f64>() / nf;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for i in 0..n {
        let dx = xs[i] - mx;
        sxx += dx * dx;
        sxy += dx * (ys[i] - my);
    }
    if sxx == 0.0 {
        0.0
    } else {
        sxy / sxx
    }
}

/// Sliding maximum of `v` over cyclic windows of `w + 1` consecutive
/// entries; `out[i] = max(v[i], v[i+1], ..., v[i+w])` with wrap-around.
pub fn cyclic_window_max(v: &[f64], w: usize) -> Vec<f64> {
    let n = v.len();
    debug_assert!(w < 2 * n);
    // Monotone deque over the doubled array.
    let mut out = vec![f64::NEG_INFINITY; n];
    let mut deque: std::collections::VecDeque<usize> = std::collections::VecDeque::new();
    for j in 0..(2 * n) {
        let val = v[j % n];
        while let Some(&back) = deque.back() {
            if v[back % n] <= val {
                deque.pop_back();
            } else {
                break;
            }
        }
        deque.push_back(j);
        // Window ending at j covers [j - w, j]; it is the window that
        // starts at i = j - w.
        if j >= w {
            let i = j - w;
            while let Some(&front) = deque.front() {
                if front < i {
                    deque.pop_front();
                } else {
                    break;
                }
            }
            if i < n {
                out[i] = v[*deque.front().unwrap() % n];
            }
        }
    }
    out
}

/// Sliding minimum over cyclic windows of `w + 1` entries.
pub fn cyclic_window_min(v: &[f64], w: usize) -> Vec<f64> {
    let neg: Vec<f64> = v.iter().map(|x| -x).collect();
    cyclic_window_max(&neg, w).into_iter().map(|x| -x).collect()
}
