//! Monotonic region, `x > |a|`: `sin θ = a/x`, `sin σ = sin θ · τ/sinh τ`.

use std::f64::consts::PI;

use crate::domain::{dominant_exponent, stable_kernels, ExponentKind, FunctionQuad, OrderArg, Region, ScalingMode};
use crate::error::{Error, Result};
use crate::quadrature::{de_finite, de_semiinfinite};

use super::sin_minus;

/// Path data for the monotonic representations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonPath {
    pub theta: f64,
    pub lambda: f64,
    sin_t: f64,
    cos_t: f64,
}

impl MonPath {
    pub fn new(a: f64, x: f64) -> Self {
        let s = ((x - a) * (x + a)).sqrt();
        let theta = a.atan2(s);
        let lambda = s + a * theta;
        MonPath { theta, lambda, sin_t: a / x, cos_t: s / x }
    }

    fn from_theta(theta: f64) -> Self {
        let (sin_t, cos_t) = theta.sin_cos();
        MonPath { theta, lambda: f64::NAN, sin_t, cos_t }
    }
}

// (sinh τ - τ cosh τ) / τ = 1/τ - coth τ  times sinh τ; returns 1/τ - coth τ
fn inv_minus_coth(tau: f64) -> f64 {
    if tau == 0.0 {
        return 0.0;
    }
    if tau < 2.0 {
        // sinh τ - τ cosh τ = -Σ 2k τ^{2k+1}/(2k+1)!
        let t2 = tau * tau;
        let mut p = tau * t2 / 6.0;
        let mut s = 0.0;
        let mut k = 1.0;
        loop {
            let term = 2.0 * k * p;
            s += term;
            if term <= 1e-18 * s {
                break;
            }
            p *= t2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
            k += 1.0;
        }
        -s / (tau * tau.sinh())
    } else {
        1.0 / tau - 1.0 / tau.tanh()
    }
}

// cosh τ/τ - 1/sinh τ = (sinh 2τ / 2 - τ)/(τ sinh τ)
fn cosh_over_minus_csch(tau: f64) -> f64 {
    if tau < 2.0 {
        let u = 2.0 * tau;
        let u2 = u * u;
        let mut p = u * u2 / 6.0;
        let mut s = 0.0;
        let mut k = 1.0;
        loop {
            s += p;
            if p <= 1e-18 * s {
                break;
            }
            p *= u2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
            k += 1.0;
        }
        0.5 * s / (tau * tau.sinh())
    } else {
        tau.cosh() / tau - 1.0 / tau.sinh()
    }
}

struct MonPoint {
    sigma: f64,
    cos_s: f64,
    sin_s: f64,
    delta: f64, // θ - σ
    coshm1: f64,
}

fn mon_point(path: &MonPath, tau: f64) -> MonPoint {
    let (coshm1, omr) = stable_kernels(tau);
    let ratio = if tau == 0.0 { 1.0 } else { tau / tau.sinh() };
    let sin_s = path.sin_t * ratio;
    let cos_s = ((1.0 - sin_s) * (1.0 + sin_s)).sqrt();
    let sd = path.sin_t * omr / (path.cos_t * ratio + cos_s);
    let delta = sd.asin();
    MonPoint { sigma: path.theta - delta, cos_s, sin_s, delta, coshm1 }
}

/// `(σ, θ - σ, dσ/dτ)` at `τ`.
pub fn mon_sigma(theta: f64, tau: f64) -> (f64, f64, f64) {
    let path = MonPath::from_theta(theta);
    let m = mon_point(&path, tau);
    let ds = m.sin_s / m.cos_s * inv_minus_coth(tau);
    (m.sigma, m.delta, ds)
}

// Φ(τ), stable for small τ
fn phi_of(path: &MonPath, m: &MonPoint) -> f64 {
    // cos σ - cos θ - (θ - σ) sin θ
    let half = 0.5 * m.delta;
    let gap = -2.0 * path.cos_t * half.sin() * half.sin() + path.sin_t * sin_minus(m.delta);
    m.coshm1 * m.cos_s + gap
}

/// `Φ(τ)` of the monotonic `K` representation.
pub fn mon_phi(theta: f64, tau: f64) -> f64 {
    let path = MonPath::from_theta(theta);
    phi_of(&path, &mon_point(&path, tau))
}

// γ(θ + u) = cos θ (cos u - 1) - sin θ (sin u - u)
fn gamma_of(path: &MonPath, u: f64) -> f64 {
    let h = (0.5 * u).sin();
    -2.0 * path.cos_t * h * h - path.sin_t * sin_minus(u)
}

/// Scaled quad from the monotonic integrals, no region check.
pub fn mon_scaled(a: f64, x: f64, tol: f64) -> Result<FunctionQuad> {
    let path = MonPath::new(a, x);
    let k = de_semiinfinite(
        |tau| {
            let m = mon_point(&path, tau);
            let e = x * phi_of(&path, &m);
            if e > 745.0 {
                0.0
            } else {
                (-e).exp()
            }
        },
        0.0,
        tol,
    )?;
    let kp = de_semiinfinite(
        |tau| {
            let m = mon_point(&path, tau);
            let e = x * phi_of(&path, &m);
            if e > 745.0 {
                return 0.0;
            }
            let h = (0.5 * m.delta).sin();
            -(path.cos_t + (m.coshm1 + 2.0 * h * h) / m.cos_s) * (-e).exp()
        },
        0.0,
        tol,
    )?;
    // σ-integrals over [-θ-π, -θ+π], peak at σ = θ
    let lo = -path.theta - PI;
    let hi = -path.theta + PI;
    let th = path.theta;
    let g = |s: f64| (x * gamma_of(&path, s - th)).exp();
    let l1 = de_finite(g, lo, th, tol)?.value + de_finite(g, th, hi, tol)?.value;
    let gc = |s: f64| s.cos() * (x * gamma_of(&path, s - th)).exp();
    let lp1 = de_finite(gc, lo, th, tol)?.value + de_finite(gc, th, hi, tol)?.value;
    // correction weighted by (1 - e^{-2πa}) e^{-2λ̃}
    let lt = dominant_exponent(&OrderArg::new(a, x)?, ExponentKind::LambdaTilde)?;
    let w = -(-2.0 * PI * a).exp_m1() * (-2.0 * lt).exp();
    let (l2, lp2) = if w == 0.0 {
        (0.0, 0.0)
    } else {
        let l2 = de_semiinfinite(
            |tau| {
                let m = mon_point(&path, tau);
                let e = x * phi_of(&path, &m);
                if e > 745.0 {
                    return 0.0;
                }
                m.sin_s / m.cos_s * inv_minus_coth(tau) * (-e).exp()
            },
            0.0,
            tol,
        )?;
        let lp2 = de_semiinfinite(
            |tau| {
                let m = mon_point(&path, tau);
                let e = x * phi_of(&path, &m);
                if e > 745.0 {
                    return 0.0;
                }
                m.sin_s * cosh_over_minus_csch(tau) * (-e).exp()
            },
            0.0,
            tol,
        )?;
        (l2.value, lp2.value)
    };
    Ok(FunctionQuad {
        k: k.value,
        kp: kp.value,
        l: (l1 - w * l2) / (2.0 * PI),
        lp: (lp1 + w * lp2) / (2.0 * PI),
        scaling: ScalingMode::Scaled,
    })
}

pub fn mon_eval(p: &OrderArg, scaling: ScalingMode, tol: f64) -> Result<FunctionQuad> {
    if p.region() != Region::Monotonic {
        return Err(Error::OutOfValidity { method: "monotonic integrals" });
    }
    Ok(mon_scaled(p.a(), p.x(), tol)?.from_scaled(p, scaling))
}
