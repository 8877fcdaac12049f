//! Asymptotic expansions for large `x`.

use std::f64::consts::PI;

use crate::domain::{dominant_exponent, ExponentKind, FunctionQuad, OrderArg, ScalingMode};
use crate::error::{Error, Result};

/// Hankel symbols `(ia, k)`, `k = 0..n`.
#[derive(Debug, Clone, PartialEq)]
pub struct HankelSeq {
    pub terms: Vec<f64>,
    pub a2: f64,
}

pub fn hankel_symbols(a: f64, nmax: usize) -> HankelSeq {
    let a2 = a * a;
    let mut terms = Vec::with_capacity(nmax);
    let mut t = 1.0;
    for k in 0..nmax {
        terms.push(t);
        let h = k as f64 + 0.5;
        t *= -(h * h + a2) / (k + 1) as f64;
    }
    HankelSeq { terms, a2 }
}

pub const LARGEX_TOL: f64 = 1e-15;
const LARGEX_KMAX: usize = 200;

/// The two sums `(Σ c_k u^k, Σ c_k u^k (1 ± (2k+1) u))` with `c_k = (±1)^k (ia,k)`,
/// `u = 1/(2x)`, truncated at the smallest term.
fn sums(a: f64, x: f64, alternate: bool, tol: f64, method: &'static str) -> Result<(f64, f64)> {
    let u = 0.5 / x;
    let a2 = a * a;
    let dsign = if alternate { 1.0 } else { -1.0 };
    let mut t = 1.0f64;
    let mut s = 0.0f64;
    let mut sp = 0.0;
    let mut prev = f64::INFINITY;
    for k in 0..LARGEX_KMAX {
        let m = t.abs();
        if m > prev {
            if prev > tol * s.abs() {
                return Err(Error::AccuracyLoss { method, smallest: prev / s.abs() });
            }
            return Ok((s, sp));
        }
        let kf = k as f64;
        s += t;
        sp += t * (1.0 + dsign * (2.0 * kf + 1.0) * u);
        if m <= f64::EPSILON * 0.25 * s.abs() {
            return Ok((s, sp));
        }
        prev = m;
        let h = kf + 0.5;
        let r = (h * h + a2) / (kf + 1.0) * u;
        t *= if alternate { -r } else { r };
    }
    Err(Error::NoConvergence { method, iterations: LARGEX_KMAX })
}

// λ̄ on the monotonic side, aπ/2 - x otherwise
fn bar_shift(p: &OrderArg) -> Result<f64> {
    if p.is_monotonic_side() {
        dominant_exponent(p, ExponentKind::LambdaBar)
    } else {
        Ok(dominant_exponent(p, ExponentKind::HalfPiA)? - p.x())
    }
}

/// Scaled `(K̃, K̃')` from the large-`x` expansion.
pub fn largex_k(p: &OrderArg, tol: f64) -> Result<(f64, f64)> {
    let x = p.x();
    let (s, sp) = sums(p.a(), x, true, tol, "largex K")?;
    let pre = (0.5 * PI / x).sqrt() * bar_shift(p)?.exp();
    Ok((pre * s, -pre * sp))
}

/// Scaled `(L̃, L̃')` from the large-`x` expansion.
pub fn largex_l(p: &OrderArg, tol: f64) -> Result<(f64, f64)> {
    let x = p.x();
    let (s, sp) = sums(p.a(), x, false, tol, "largex L")?;
    let pre = (-bar_shift(p)?).exp() / (2.0 * PI * x).sqrt();
    Ok((pre * s, pre * sp))
}

pub fn largex_eval(p: &OrderArg, scaling: ScalingMode) -> Result<FunctionQuad> {
    let (k, kp) = largex_k(p, LARGEX_TOL)?;
    let (l, lp) = largex_l(p, LARGEX_TOL)?;
    Ok(FunctionQuad { k, kp, l, lp, scaling: ScalingMode::Scaled }.from_scaled(p, scaling))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbols() {
        assert_eq!(hankel_symbols(1.0, 2).terms, vec![1.0, -1.25]);
        assert_eq!(hankel_symbols(1.0, 3).terms, vec![1.0, -1.25, 2.03125]);
        assert_eq!(hankel_symbols(0.0, 2).terms, vec![1.0, -0.25]);
    }

    #[test]
    fn k0_at_fifty() {
        let p = OrderArg::new(0.0, 50.0).unwrap();
        let q = largex_eval(&p, ScalingMode::Unscaled).unwrap();
        assert!((q.k / 3.410_167_749_789_495_5e-23 - 1.0).abs() < 1e-13);
        let lead = (PI / 100.0).sqrt() * (-50.0f64).exp();
        assert!((q.k / lead - 1.0).abs() < 1.0 / 100.0);
        assert!(q.wronskian_residual(50.0).abs() < 1e-13);
    }

    #[test]
    fn refuses_small_x() {
        let p = OrderArg::new(5.0, 6.0).unwrap();
        assert!(matches!(largex_l(&p, LARGEX_TOL), Err(Error::AccuracyLoss { .. })));
    }
}
