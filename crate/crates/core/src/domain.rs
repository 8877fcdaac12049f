//! Argument validation, dominant exponents, range guards and small kernels
//! shared by every evaluation method.

use std::f64::consts::{FRAC_PI_2, LN_10};

use crate::error::{Error, Result};

/// Half-width (relative) of the band around `x = |a|` classified as turning point.
pub const DELTA_TP: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    Monotonic,
    Oscillatory,
    TurningPoint,
}

/// A validated `(a, x)` pair. The order enters only through `|a|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderArg {
    a: f64,
    x: f64,
    region: Region,
}

impl OrderArg {
    pub fn new(a: f64, x: f64) -> Result<Self> {
        if !a.is_finite() {
            return Err(Error::Domain(format!("order a = {a} is not finite")));
        }
        if !(x > 0.0) || !x.is_finite() {
            return Err(Error::Domain(format!("argument x = {x} must be positive and finite")));
        }
        let a = a.abs();
        let region = if x >= a * (1.0 + DELTA_TP) {
            Region::Monotonic
        } else if x <= a * (1.0 - DELTA_TP) {
            Region::Oscillatory
        } else {
            Region::TurningPoint
        };
        Ok(OrderArg { a, x, region })
    }

    /// `|a|`.
    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn region(&self) -> Region {
        self.region
    }

    /// True when `x >= |a|`, i.e. the side where the scale factor is `e^{±λ}`.
    pub fn is_monotonic_side(&self) -> bool {
        self.x >= self.a
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ScalingMode {
    #[default]
    Unscaled,
    Scaled,
}

/// `K`, `K'`, `L`, `L'` at one point, in the form given by `scaling`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionQuad {
    pub k: f64,
    pub kp: f64,
    pub l: f64,
    pub lp: f64,
    pub scaling: ScalingMode,
}

impl FunctionQuad {
    /// `x (K L' - K' L) - 1`. The scale factors cancel, so this works in both modes.
    pub fn wronskian_residual(&self, x: f64) -> f64 {
        x * (self.k * self.lp - self.kp * self.l) - 1.0
    }

    /// Convert a scaled quad to the requested mode.
    pub fn from_scaled(self, p: &OrderArg, scaling: ScalingMode) -> FunctionQuad {
        debug_assert_eq!(self.scaling, ScalingMode::Scaled);
        match scaling {
            ScalingMode::Scaled => self,
            ScalingMode::Unscaled => {
                let s = scale_factor_log(p, Family::K);
                let ek = (-s).exp();
                let el = s.exp();
                FunctionQuad {
                    k: self.k * ek,
                    kp: self.kp * ek,
                    l: self.l * el,
                    lp: self.lp * el,
                    scaling: ScalingMode::Unscaled,
                }
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        self.k.is_finite() && self.kp.is_finite() && self.l.is_finite() && self.lp.is_finite()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentKind {
    /// `λ = sqrt(x²-a²) + a asin(a/x)`
    LambdaMon,
    /// `λ̃ = λ - aπ/2`
    LambdaTilde,
    /// `λ̄ = λ - x`
    LambdaBar,
    /// `|a|π/2`
    HalfPiA,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    K,
    L,
}

/// `(sqrt((x-a)(x+a)), δ = acos(a/x))` for `x >= a`, computed without cancellation.
fn mon_angles(a: f64, x: f64) -> (f64, f64) {
    let s = ((x - a) * (x + a)).sqrt();
    (s, s.atan2(a))
}

// x (sin δ - δ cos δ)
fn lambda_tilde_series(x: f64, d: f64) -> f64 {
    let d2 = d * d;
    let mut p = d * d2 / 6.0;
    let mut sum = 0.0;
    let mut k = 1.0;
    loop {
        let t = 2.0 * k * p;
        let old = sum;
        if (k as i64) % 2 == 1 {
            sum += t;
        } else {
            sum -= t;
        }
        if sum == old {
            break;
        }
        p *= d2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
        k += 1.0;
    }
    x * sum
}

// x ((cos θ - 1) + θ sin θ)
fn lambda_bar_series(x: f64, th: f64) -> f64 {
    let t2 = th * th;
    let mut q = t2 / 2.0;
    let mut sum = 0.0;
    let mut k = 1.0;
    loop {
        let t = (2.0 * k - 1.0) * q;
        let old = sum;
        if (k as i64) % 2 == 1 {
            sum += t;
        } else {
            sum -= t;
        }
        if sum == old {
            break;
        }
        q *= t2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
        k += 1.0;
    }
    x * sum
}

const SERIES_SWITCH: f64 = 1.2;

pub fn dominant_exponent(p: &OrderArg, kind: ExponentKind) -> Result<f64> {
    let (a, x) = (p.a, p.x);
    if kind == ExponentKind::HalfPiA {
        return Ok(a * FRAC_PI_2);
    }
    if x < a {
        return Err(Error::Domain(format!(
            "exponent {kind:?} needs x >= |a| (x = {x}, |a| = {a})"
        )));
    }
    let (s, d) = mon_angles(a, x);
    Ok(match kind {
        ExponentKind::LambdaMon => s + a * (FRAC_PI_2 - d),
        ExponentKind::LambdaTilde => {
            if d < SERIES_SWITCH {
                lambda_tilde_series(x, d)
            } else {
                s - a * d
            }
        }
        ExponentKind::LambdaBar => {
            let th = a.atan2(s);
            if th < SERIES_SWITCH {
                lambda_bar_series(x, th)
            } else {
                s + a * th - x
            }
        }
        ExponentKind::HalfPiA => unreachable!(),
    })
}

/// Logarithm of the factor that turns the unscaled function into the scaled one.
pub fn scale_factor_log(p: &OrderArg, fam: Family) -> f64 {
    let e = if p.is_monotonic_side() {
        let (s, d) = mon_angles(p.a, p.x);
        s + p.a * (FRAC_PI_2 - d)
    } else {
        p.a * FRAC_PI_2
    };
    match fam {
        Family::K => e,
        Family::L => -e,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GuardOutcome {
    Ok,
    OverflowRisk,
    UnderflowRisk,
}

/// Exponent limits for unscaled evaluation.
///
/// `log_limit` bounds the growth of `L` (overflow side) and
/// `log_limit_underflow` the decay of `K`; both are `ln N - n ln 10`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeGuardConfig {
    pub n_safety: i32,
    pub log_limit: f64,
    pub log_limit_underflow: f64,
}

impl RangeGuardConfig {
    /// Limits for IEEE double with safety factor `10^n_safety`.
    pub fn for_f64(n_safety: i32) -> Self {
        let margin = n_safety as f64 * LN_10;
        RangeGuardConfig {
            n_safety,
            log_limit: f64::MAX.ln() - margin,
            log_limit_underflow: -f64::MIN_POSITIVE.ln() - margin,
        }
    }

    /// Both limits set to `ln(10^e)`, e.g. `e = 300`.
    pub fn from_decimal_exponent(e: f64) -> Self {
        RangeGuardConfig {
            n_safety: 0,
            log_limit: e * LN_10,
            log_limit_underflow: e * LN_10,
        }
    }

    /// Largest `|a|` accepted unscaled in the oscillatory region.
    pub fn a_max(&self) -> f64 {
        2.0 * self.log_limit.min(self.log_limit_underflow) / std::f64::consts::PI
    }
}

impl Default for RangeGuardConfig {
    fn default() -> Self {
        Self::for_f64(8)
    }
}

pub fn range_guard(p: &OrderArg, cfg: &RangeGuardConfig, scaling: ScalingMode) -> GuardOutcome {
    if scaling == ScalingMode::Scaled {
        return GuardOutcome::Ok;
    }
    let e = scale_factor_log(p, Family::K);
    if e > cfg.log_limit {
        GuardOutcome::OverflowRisk
    } else if e > cfg.log_limit_underflow {
        GuardOutcome::UnderflowRisk
    } else {
        GuardOutcome::Ok
    }
}

/// `cosh τ - 1` and `1 - τ²/sinh²τ` for `τ >= 0`.
pub fn stable_kernels(tau: f64) -> (f64, f64) {
    let h = (0.5 * tau).sinh();
    let coshm1 = 2.0 * h * h;
    let one_minus_ratio2 = if tau < 1.0 {
        // s = sinh τ/τ - 1
        let t2 = tau * tau;
        let mut term = t2 / 6.0;
        let mut s = 0.0;
        let mut k = 1.0;
        loop {
            s += term;
            if term <= 1e-18 * s {
                break;
            }
            term *= t2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
            k += 1.0;
        }
        (2.0 * s + s * s) / ((1.0 + s) * (1.0 + s))
    } else {
        let r = tau / tau.sinh();
        1.0 - r * r
    };
    (coshm1, one_minus_ratio2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn region_classification() {
        assert_eq!(OrderArg::new(0.0, 1.0).unwrap().region(), Region::Monotonic);
        assert_eq!(OrderArg::new(10.0, 11.0).unwrap().region(), Region::Monotonic);
        assert_eq!(OrderArg::new(10.0, 10.5).unwrap().region(), Region::TurningPoint);
        assert_eq!(OrderArg::new(-10.0, 9.0).unwrap().region(), Region::Oscillatory);
        assert!(OrderArg::new(1.0, 0.0).is_err());
        assert!(OrderArg::new(1.0, -1.0).is_err());
        assert!(OrderArg::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn trivial_exponents() {
        let p = OrderArg::new(0.0, 1.0).unwrap();
        assert_eq!(dominant_exponent(&p, ExponentKind::LambdaMon).unwrap(), 1.0);
        let p = OrderArg::new(2.0, 2.0).unwrap();
        assert_eq!(dominant_exponent(&p, ExponentKind::LambdaMon).unwrap(), std::f64::consts::PI);
        assert_eq!(dominant_exponent(&p, ExponentKind::LambdaTilde).unwrap(), 0.0);
        let p = OrderArg::new(0.0, 5.0).unwrap();
        assert_eq!(dominant_exponent(&p, ExponentKind::LambdaBar).unwrap(), 0.0);
        let p = OrderArg::new(3.0, 1.0).unwrap();
        assert!(dominant_exponent(&p, ExponentKind::LambdaMon).is_err());
        assert_eq!(scale_factor_log(&p, Family::K), 1.5 * std::f64::consts::PI);
        assert_eq!(scale_factor_log(&p, Family::L), -1.5 * std::f64::consts::PI);
    }

    #[test]
    fn guard_limits() {
        let cfg = RangeGuardConfig::from_decimal_exponent(300.0);
        assert!((cfg.a_max() - 439.7).abs() < 0.1);
        let g = |a: f64, x: f64, s| range_guard(&OrderArg::new(a, x).unwrap(), &cfg, s);
        assert_eq!(g(439.0, 1.0, ScalingMode::Unscaled), GuardOutcome::Ok);
        assert_ne!(g(441.0, 1.0, ScalingMode::Unscaled), GuardOutcome::Ok);
        assert_eq!(g(0.0, 690.0, ScalingMode::Unscaled), GuardOutcome::Ok);
        assert_ne!(g(0.0, 691.0, ScalingMode::Unscaled), GuardOutcome::Ok);
        assert_eq!(g(1000.0, 1.0, ScalingMode::Scaled), GuardOutcome::Ok);
        let d = RangeGuardConfig::default();
        assert!(d.log_limit > 0.0 && d.log_limit_underflow > 0.0);
    }

    #[test]
    fn kernels_small_tau() {
        assert_eq!(stable_kernels(0.0), (0.0, 0.0));
        let (c, r) = stable_kernels(1e-8);
        assert!((c / 5e-17 - 1.0).abs() < 1e-12);
        assert!((r / (1e-16 / 3.0) - 1.0).abs() < 1e-12);
        let (c, r) = stable_kernels(1.0);
        assert!((c / 0.5430806348152437 - 1.0).abs() < 4.0 * f64::EPSILON);
        assert!((r / 0.27593833903368953359 - 1.0).abs() < 4.0 * f64::EPSILON);
        assert_eq!(stable_kernels(1000.0).1, 1.0);
    }
}
