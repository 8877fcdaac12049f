//! Oscillatory region, `x < |a|`: `cosh μ = a/x`, steepest-descent path
//! through the saddle `τ = μ`, `σ = π/2`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::domain::{FunctionQuad, OrderArg, Region, ScalingMode};
use crate::error::{Error, Result};
use crate::quadrature::{de_finite, de_finite_with, de_semiinfinite, QuadConfig};

use super::{sin_minus, sinh_minus};

/// Above this order the Simplified representation is used by default.
pub const A_SIMPL: f64 = 25.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OscMode {
    /// All three pieces of the path, exact for every `a`.
    Full,
    /// Drops terms of relative size `e^{-πa}`.
    Simplified,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscPath {
    pub a: f64,
    pub x: f64,
    pub mu: f64,
    pub tau0: f64,
    pub chi: f64,
    cosh_mu: f64,
    sinh_mu: f64,
}

impl OscPath {
    pub fn new(a: f64, x: f64) -> Self {
        let r = ((a - x) * (a + x)).sqrt();
        let sinh_mu = r / x;
        let cosh_mu = a / x;
        let mu = sinh_mu.asinh();
        OscPath { a, x, mu, tau0: mu - sinh_mu / cosh_mu, chi: r - a * mu, cosh_mu, sinh_mu }
    }
}

/// Point on the path with `τ >= τ0` (`σ` in `(0, π]`).
#[derive(Debug, Clone, Copy)]
struct TauPoint {
    sin_s: f64,
    cos_s: f64,
    psi: f64,
    dsigma: f64,
}

fn tau_point(p: &OscPath, tau: f64) -> TauPoint {
    let eps = tau - p.mu;
    let sh = tau.sinh();
    let one_minus = (p.sinh_mu * 2.0 * (0.5 * eps).sinh().powi(2) + p.cosh_mu * sinh_minus(eps)) / sh;
    let d = 2.0 * (0.5 * one_minus).clamp(0.0, 1.0).sqrt().asin();
    let (sd, cd) = d.sin_cos();
    let sign = if eps >= 0.0 { 1.0 } else { -1.0 };
    let cos_s = sign * sd;
    let g = p.a * sin_minus(d) + p.x * 2.0 * (0.5 * (tau + p.mu)).sinh() * (0.5 * eps).sinh() * sd;
    let psi = sign * g;
    let dsigma = if eps == 0.0 {
        -1.0
    } else {
        let num = sinh_minus(eps)
            + eps
                * (-2.0 * (0.5 * eps).sinh().powi(2)
                    - p.sinh_mu * p.sinh_mu * eps.cosh()
                    - p.cosh_mu * p.sinh_mu * eps.sinh());
        num / (sh * sh * cos_s)
    };
    TauPoint { sin_s: cd, cos_s, psi, dsigma }
}

/// `(σ, dσ/dτ)` for `τ >= τ0`.
pub fn osc_sigma_tau(p: &OscPath, tau: f64) -> (f64, f64) {
    let t = tau_point(p, tau);
    let d = t.cos_s.abs().atan2(t.sin_s);
    let sigma = if tau >= p.mu { FRAC_PI_2 - d } else { FRAC_PI_2 + d };
    (sigma, t.dsigma)
}

/// `(τ, dτ/dσ)` for `σ` in `[π, 3π/2]`, where `τ` falls from `τ0` towards 0.
pub fn osc_invert_sigma(p: &OscPath, sigma: f64) -> Result<(f64, f64)> {
    if !(PI..=1.5 * PI).contains(&sigma) {
        return Err(Error::Domain(format!("sigma = {sigma} outside [pi, 3pi/2]")));
    }
    let (sv, cv) = (sigma - PI).sin_cos();
    let mut tau = p.tau0;
    if sv > 0.0 {
        let h = |t: f64| -sv * t.sinh() - (t - p.mu) * p.cosh_mu - p.sinh_mu;
        let (mut lo, mut hi) = (0.0, p.tau0);
        tau = 0.5 * (lo + hi);
        let mut done = false;
        for _ in 0..200 {
            let v = h(tau);
            if v > 0.0 {
                lo = tau;
            } else {
                hi = tau;
            }
            let dv = -sv * tau.cosh() - p.cosh_mu;
            let mut next = tau - v / dv;
            if !(next > lo && next < hi) {
                next = 0.5 * (lo + hi);
            }
            let step = (next - tau).abs();
            tau = next;
            if step <= 2.0 * f64::EPSILON * tau.max(f64::MIN_POSITIVE) || hi - lo <= f64::EPSILON * hi {
                done = true;
                break;
            }
        }
        if !done {
            return Err(Error::NoConvergence { method: "path inversion", iterations: 200 });
        }
    }
    let dtau = -cv * tau.sinh() / (p.cosh_mu + sv * tau.cosh());
    Ok((tau, dtau))
}

// e^{-Ψ} and e^{-2ρ}, ρ = aπ - Ψ
fn weights(p: &OscPath, psi: f64) -> (f64, f64) {
    let e = if psi > 745.0 { 0.0 } else { (-psi).exp() };
    let rho = p.a * PI - psi;
    let r = if rho > 372.0 { 0.0 } else { (-2.0 * rho).exp() };
    (e, r)
}

// [K, K', L, L'] integrand pieces at τ (τ-branches), simplified weights when `full` is false
fn tau_integrand(p: &OscPath, tau: f64, full: bool, q: f64, which: usize) -> f64 {
    if tau > 700.0 {
        return 0.0;
    }
    let t = tau_point(p, tau);
    if t.psi > 745.0 {
        return 0.0;
    }
    let (sc, cc) = p.chi.sin_cos();
    let (ch, sh) = (tau.cosh(), tau.sinh());
    let sp = t.dsigma;
    let am = -ch * t.cos_s + sh * t.sin_s * sp;
    let cm = -sh * t.sin_s - ch * t.cos_s * sp;
    let (e, r) = weights(p, t.psi);
    if !full || tau >= p.mu {
        // e^{-Ψ} times the plain combinations; the L half-weight is applied by the caller
        return e * match which {
            0 => cc + sc * sp,
            1 => cc * am + sc * cm,
            2 => sc - cc * sp,
            _ => sc * am - cc * cm,
        };
    }
    let (wc, ws) = (e * (1.0 + r), e * (1.0 - r));
    match which {
        0 => (cc * ws + sc * wc * sp) / q,
        1 => (cc * wc * am + sc * ws * cm) / q,
        2 => 0.5 * (sc * ws - cc * wc * sp),
        _ => 0.5 * (sc * wc * am - cc * ws * cm),
    }
}

fn sigma_integrand(p: &OscPath, sigma: f64, q: f64, which: usize) -> Result<f64> {
    let (tau, ts) = osc_invert_sigma(p, sigma)?;
    let (sv, cv) = (sigma - PI).sin_cos();
    let psi = -p.x * tau.cosh() * cv + p.a * (sigma - FRAC_PI_2);
    let (e, r) = weights(p, psi);
    if e == 0.0 {
        return Ok(0.0);
    }
    let (sc, cc) = p.chi.sin_cos();
    let (ch, sh) = (tau.cosh(), tau.sinh());
    let bm = ch * cv * ts - sh * sv;
    let dm = sh * sv * ts + ch * cv;
    let (wc, ws) = (e * (1.0 + r), e * (1.0 - r));
    Ok(match which {
        0 => (cc * ws * ts + sc * wc) / q,
        1 => (cc * wc * bm + sc * ws * dm) / q,
        2 => 0.5 * (sc * ws * ts - cc * wc),
        _ => 0.5 * (sc * wc * bm - cc * ws * dm),
    })
}

/// Scaled quad from the oscillatory integrals, no region check.
pub fn osc_scaled(a: f64, x: f64, tol: f64, mode: OscMode) -> Result<FunctionQuad> {
    let p = OscPath::new(a, x);
    let full = mode == OscMode::Full;
    let q = -(-2.0 * PI * a).exp_m1();
    let mut out = [0.0; 4];
    for (which, o) in out.iter_mut().enumerate() {
        let i1 = de_semiinfinite(|t| tau_integrand(&p, t, full, q, which), p.mu, tol)?.value;
        let i2 = de_finite(|t| tau_integrand(&p, t, full, q, which), p.tau0, p.mu, tol)?.value;
        *o = if !full {
            let s = i1 + i2;
            if which >= 2 {
                s / (2.0 * PI)
            } else {
                s
            }
        } else {
            let mut err = None;
            // this piece is O(e^{-πa}) relative to the rest; judge it on that scale
            let cfg = QuadConfig { floor: i1.abs().max(i2.abs()).max(f64::MIN_POSITIVE), ..QuadConfig::default() };
            let i3 = de_finite_with(
                &mut |s| match sigma_integrand(&p, s, q, which) {
                    Ok(v) => v,
                    Err(e) => {
                        err.get_or_insert(e);
                        0.0
                    }
                },
                PI,
                1.5 * PI,
                tol,
                &cfg,
            )?
            .value;
            if let Some(e) = err {
                return Err(e);
            }
            if which >= 2 {
                (0.5 * q * i1 + i2 - i3) / PI
            } else {
                i1 + i2 - i3
            }
        };
    }
    Ok(FunctionQuad { k: out[0], kp: out[1], l: out[2], lp: out[3], scaling: ScalingMode::Scaled })
}

pub fn osc_eval(p: &OrderArg, scaling: ScalingMode, tol: f64, mode: OscMode) -> Result<FunctionQuad> {
    if p.region() != Region::Oscillatory {
        return Err(Error::OutOfValidity { method: "oscillatory integrals" });
    }
    if mode == OscMode::Simplified && p.a() < A_SIMPL {
        return Err(Error::OutOfValidity { method: "simplified oscillatory integral" });
    }
    Ok(osc_scaled(p.a(), p.x(), tol, mode)?.from_scaled(p, scaling))
}
