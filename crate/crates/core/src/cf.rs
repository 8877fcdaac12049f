//! Continued fraction (Steed's method) for `K` and `K'` in the monotonic region.
//!
//! With order `ν = ia` the coefficient `1/4 - ν² = 1/4 + a²` is real and every
//! quantity of the recurrence stays real.

use std::f64::consts::PI;

use crate::domain::{dominant_exponent, ExponentKind, OrderArg, DELTA_TP};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CFConfig {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for CFConfig {
    fn default() -> Self {
        CFConfig { tol: f64::EPSILON, max_iter: 2000 }
    }
}

pub const CF_X_MIN: f64 = 2.0;
pub const CF_A_MAX: f64 = 100.0;

pub fn cf_accepts(p: &OrderArg) -> bool {
    p.a() <= CF_A_MAX && p.x() >= CF_X_MIN.max(p.a() * (1.0 + DELTA_TP))
}

/// Scaled `(K̃, K̃', iterations)` without the validity check.
pub fn cf_raw(a: f64, x: f64, cfg: &CFConfig) -> Result<(f64, f64, usize)> {
    let a1 = 0.25 + a * a;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut q = a1;
    let mut c = a1;
    let mut aa = -a1;
    let mut s = 1.0 + q * delh;
    let mut iter = 0;
    for i in 2..=cfg.max_iter {
        let fi = i as f64;
        aa -= 2.0 * (fi - 1.0);
        c = -aa * c / fi;
        let qnew = (q1 - b * q2) / aa;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + aa * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        iter = i;
        if (dels / s).abs() < cfg.tol && (delh / h).abs() < cfg.tol {
            let h = a1 * h;
            let lbar = if x >= a {
                dominant_exponent(&OrderArg::new(a, x)?, ExponentKind::LambdaBar)?
            } else {
                0.5 * PI * a - x
            };
            let k = (0.5 * PI / x).sqrt() * lbar.exp() / s;
            let kp = -k * (x + 0.5 - h) / x;
            return Ok((k, kp, iter));
        }
    }
    Err(Error::NoConvergence { method: "continued fraction", iterations: iter })
}

/// Scaled `(K̃, K̃')` by the continued fraction.
pub fn cf_eval(p: &OrderArg, cfg: &CFConfig) -> Result<(f64, f64)> {
    if !cf_accepts(p) {
        return Err(Error::OutOfValidity { method: "continued fraction" });
    }
    let (k, kp, _) = cf_raw(p.a(), p.x(), cfg)?;
    Ok((k, kp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_order_zero() {
        let (k, kp, _) = cf_raw(0.0, 10.0, &CFConfig::default()).unwrap();
        let e = (10.0f64).exp();
        assert!((k / e / 1.778_006_231_616_765e-5 - 1.0).abs() < 1e-14);
        assert!((kp / e / -1.864_877_345_382_558e-5 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn refuses_outside() {
        let p = OrderArg::new(10.0, 10.5).unwrap();
        assert!(cf_eval(&p, &CFConfig::default()).is_err());
        let p = OrderArg::new(150.0, 400.0).unwrap();
        assert!(cf_eval(&p, &CFConfig::default()).is_err());
    }
}
