//! Trapezoidal rule with mesh halving over the real line, plus the
//! double-exponential maps for finite and semi-infinite intervals.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    /// Magnitude of the last halving correction.
    pub err_est: f64,
    /// Number of halvings performed.
    pub levels: usize,
    /// Number of integrand evaluations.
    pub evals: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub h0: f64,
    pub levels_max: usize,
    /// Tail terms below `trunc_eps * max|term|` are dropped.
    pub trunc_eps: f64,
    /// Scan at least this far in `t` before the tail test may stop.
    pub t_min: f64,
    pub t_max: f64,
    pub floor: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            h0: 0.5,
            levels_max: 10,
            trunc_eps: 1e-18,
            t_min: 4.0,
            t_max: 12.0,
            floor: f64::MIN_POSITIVE,
        }
    }
}

// Neumaier compensated sum.
#[derive(Clone, Copy, Default)]
struct Sum {
    hi: f64,
    lo: f64,
}

impl Sum {
    fn add(&mut self, v: f64) {
        let t = self.hi + v;
        if self.hi.abs() >= v.abs() {
            self.lo += (self.hi - t) + v;
        } else {
            self.lo += (v - t) + self.hi;
        }
        self.hi = t;
    }

    fn value(self) -> f64 {
        self.hi + self.lo
    }
}

struct Accum {
    sum: Sum,
    abs_sum: f64,
    max: f64,
    evals: usize,
}

// Sums g(t0 + j*step) for j = 0, 1, 2, ... until the tail is negligible.
fn scan<F: FnMut(f64) -> f64>(g: &mut F, t0: f64, step: f64, cfg: &QuadConfig, acc: &mut Accum) {
    let mut small = 0;
    let mut j = 0.0;
    loop {
        let t = t0 + j * step;
        if t.abs() > cfg.t_max {
            break;
        }
        j += 1.0;
        let v = g(t);
        acc.evals += 1;
        let m = v.abs();
        if m.is_finite() {
            acc.sum.add(v);
            acc.abs_sum += m;
            if m > acc.max {
                acc.max = m;
            }
        }
        if m <= cfg.trunc_eps * acc.max || !m.is_finite() {
            small += 1;
            if small >= 2 && t.abs() >= cfg.t_min {
                break;
            }
        } else {
            small = 0;
        }
    }
}

/// Trapezoidal sums of `g` over the real line, halving `h` until two
/// successive sums agree to `tol`.
pub fn trapezoid<F: FnMut(f64) -> f64>(mut g: F, tol: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    let mut h = cfg.h0;
    let mut acc = Accum { sum: Sum::default(), abs_sum: 0.0, max: 0.0, evals: 0 };
    scan(&mut g, 0.0, h, cfg, &mut acc);
    scan(&mut g, -h, -h, cfg, &mut acc);
    let mut total = acc.sum;
    let mut abs_total = acc.abs_sum;
    let mut evals = acc.evals;
    let mut value = h * total.value();
    let mut err = f64::INFINITY;
    let mut prev = f64::INFINITY;
    for level in 1..=cfg.levels_max {
        h *= 0.5;
        let mut acc = Accum { sum: Sum::default(), abs_sum: 0.0, max: acc.max, evals: 0 };
        scan(&mut g, h, 2.0 * h, cfg, &mut acc);
        scan(&mut g, -h, -2.0 * h, cfg, &mut acc);
        total.add(acc.sum.hi);
        total.add(acc.sum.lo);
        abs_total += acc.abs_sum;
        evals += acc.evals;
        let new = h * total.value();
        err = (new - value).abs();
        value = new;
        let noise = 8.0 * f64::EPSILON * h * abs_total;
        // a correction that stopped shrinking at a few ulps of the absolute
        // sum is rounding in the integrand, not discretisation
        let stalled = err <= 8.0 * noise && err > 0.25 * prev;
        if err <= tol * value.abs().max(cfg.floor) || err <= noise || stalled {
            return Ok(QuadResult { value, err_est: err, levels: level, evals });
        }
        prev = err;
    }
    if err <= tol * value.abs().max(cfg.floor) {
        Ok(QuadResult { value, err_est: err, levels: cfg.levels_max, evals })
    } else {
        Err(Error::NoConvergence { method: "quadrature", iterations: cfg.levels_max })
    }
}

/// `∫_a^b f(x) dx` with `x = (a+b)/2 + (b-a)/2 tanh(sinh t)`.
pub fn de_finite<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    de_finite_with(&mut f, a, b, tol, &QuadConfig::default())
}

pub fn de_finite_with<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    tol: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    if !(a < b) {
        return Err(Error::Domain(format!("empty interval [{a}, {b}]")));
    }
    let half = 0.5 * (b - a);
    trapezoid(
        |t| {
            let u = t.sinh();
            // distance to the nearer endpoint, kept exact when it underflows b's ulp
            let e = (-2.0 * u.abs()).exp();
            let d = 2.0 * half * e / (1.0 + e);
            let x = if u > 0.0 { b - d } else { a + d };
            let c = u.cosh();
            let w = half * t.cosh() / (c * c);
            if w == 0.0 {
                return 0.0;
            }
            let v = f(x.clamp(a, b));
            if v.is_finite() {
                v * w
            } else {
                0.0
            }
        },
        tol,
        cfg,
    )
}

/// `∫_a^∞ f(τ) dτ` with `τ = a + asinh(e^x)`, `x = sinh t`.
pub fn de_semiinfinite<F: FnMut(f64) -> f64>(mut f: F, a: f64, tol: f64) -> Result<QuadResult> {
    de_semiinfinite_with(&mut f, a, tol, &QuadConfig::default())
}

pub fn de_semiinfinite_with<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    tol: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    trapezoid(
        |t| {
            let x = t.sinh();
            // dτ/dx = e^x / sqrt(1 + e^{2x})
            let (tau, dtau) = if x < 0.0 {
                let e = x.exp();
                if e == 0.0 {
                    return 0.0;
                }
                (a + e.asinh(), e / (1.0 + e * e).sqrt())
            } else {
                let e = (-x).exp();
                let off = if e > 0.0 { (1.0 / e).asinh() } else { x + std::f64::consts::LN_2 };
                (a + off, 1.0 / (1.0 + e * e).sqrt())
            };
            let v = f(tau);
            if v == 0.0 {
                return 0.0;
            }
            v * dtau * t.cosh()
        },
        tol,
        cfg,
    )
}
