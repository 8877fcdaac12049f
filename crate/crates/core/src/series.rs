//! Power series about `x = 0`.

use std::f64::consts::PI;

use crate::domain::{dominant_exponent, ExponentKind, FunctionQuad, OrderArg, ScalingMode};
use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_6;

// ζ(3), ζ(5), ..., ζ(31)
const ZETA_ODD: [f64; 15] = [
    1.202_056_903_159_594_285_4,
    1.036_927_755_143_369_926_3,
    1.008_349_277_381_922_826_8,
    1.002_008_392_826_082_214_4,
    1.000_494_188_604_119_464_6,
    1.000_122_713_347_578_489_1,
    1.000_030_588_236_307_020_5,
    1.000_007_637_197_637_899_8,
    1.000_001_908_212_716_553_9,
    1.000_000_476_932_986_787_8,
    1.000_000_119_219_925_965_3,
    1.000_000_029_803_503_514_7,
    1.000_000_007_450_711_789_8,
    1.000_000_001_862_659_723_5,
    1.000_000_000_465_662_906_5,
];

// B_{2j} / (2j (2j-1)), j = 1..10
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

// σ₀(a)/a from the Maclaurin series of ln Γ(1+z), |a| < 0.25.
fn sigma0_over_a_small(a: f64) -> f64 {
    let a2 = a * a;
    let mut p = a2;
    let mut sum = -EULER_GAMMA;
    for (k, z) in ZETA_ODD.iter().enumerate() {
        let n = (2 * k + 3) as f64;
        let t = z * p / n;
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        p *= a2;
    }
    sum
}

/// Coulomb phase shift `σ₀(a) = arg Γ(1 + ia)`.
pub fn coulomb_phase0(a: f64) -> f64 {
    if a < 0.0 {
        return -coulomb_phase0(-a);
    }
    if a < 0.25 {
        return a * sigma0_over_a_small(a);
    }
    // shift up to |m + 1 + ia| >= 15, then Stirling
    let mut m = 0usize;
    while ((m + 1) as f64).powi(2) + a * a < 225.0 {
        m += 1;
    }
    let u = (m + 1) as f64;
    let r2 = u * u + a * a;
    let arg = a.atan2(u);
    let mut s = (u - 0.5) * arg + 0.5 * a * r2.ln() - a;
    let r = r2.sqrt();
    let mut rp = r;
    for (j, c) in STIRLING.iter().enumerate() {
        let n = (2 * j + 1) as f64;
        s -= c * (n * arg).sin() / rp;
        rp *= r2;
    }
    for k in 1..=m {
        s -= (a / k as f64).atan();
    }
    s
}

/// `n(a) = e^{πa/2} sqrt((1 - e^{-2πa})/(2πa))`.
pub fn normalization(a: f64) -> f64 {
    (0.5 * PI * a).exp() * reduced_normalization(a)
}

// n(a) e^{-πa/2}
fn reduced_normalization(a: f64) -> f64 {
    let t = 2.0 * PI * a;
    if t < 1e-300 {
        1.0
    } else {
        (-(-t).exp_m1() / t).sqrt()
    }
}

fn sinc(y: f64) -> f64 {
    if y.abs() < 1e-4 {
        1.0 - y * y / 6.0
    } else {
        y.sin() / y
    }
}

/// Starting values `(f0, f1, r0, r1)` of the coefficient recurrence.
pub fn series_seeds(a: f64, x: f64) -> (f64, f64, f64, f64) {
    let a = a.abs();
    let lx = (0.5 * x).ln();
    let (psi, f0) = if a < 0.25 {
        let g = sigma0_over_a_small(a) - lx;
        (a * g, g * sinc(a * g))
    } else {
        let psi = coulomb_phase0(a) - a * lx;
        (psi, psi.sin() / a)
    };
    let c = psi.cos();
    let q = 1.0 + a * a;
    (f0, (f0 + c) / q, c, (c - a * a * f0) / q)
}

/// Forward recurrence window for `f_k`, `r_k` and `c_k = (x/2)^{2k}/k!`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesCoeffState {
    pub f_prev2: f64,
    pub f_prev1: f64,
    pub r_prev2: f64,
    pub r_prev1: f64,
    /// Index of `f_prev1`, `r_prev1`, `c_k`.
    pub k: usize,
    pub c_k: f64,
    pub n_a: f64,
}

impl SeriesCoeffState {
    /// State at `k = 1`.
    pub fn new(a: f64, x: f64) -> Self {
        let (f0, f1, r0, r1) = series_seeds(a, x);
        SeriesCoeffState {
            f_prev2: f0,
            f_prev1: f1,
            r_prev2: r0,
            r_prev1: r1,
            k: 1,
            c_k: 0.25 * x * x,
            n_a: normalization(a.abs()),
        }
    }

    /// Advance to `k + 1`.
    pub fn step(&mut self, a: f64, x: f64) {
        let k = (self.k + 1) as f64;
        let d = k * k + a * a;
        let f = ((2.0 * k - 1.0) * self.f_prev1 - self.f_prev2) / d;
        let r = ((2.0 * k - 1.0) * self.r_prev1 - self.r_prev2) / d;
        self.f_prev2 = self.f_prev1;
        self.f_prev1 = f;
        self.r_prev2 = self.r_prev1;
        self.r_prev1 = r;
        self.c_k *= 0.25 * x * x / k;
        self.k += 1;
    }
}

pub const SERIES_KMAX: usize = 300;

/// All four functions from the power series. Intended for small `x/|a|` and small `x`.
pub fn series_eval(p: &OrderArg, scaling: ScalingMode) -> Result<FunctionQuad> {
    let (a, x) = (p.a(), p.x());
    let (f0, f1, r0, r1) = series_seeds(a, x);
    let a2 = a * a;
    let y = 0.25 * x * x;
    // k = 0 and k = 1 terms
    let mut sk = f0 + f1 * y;
    let mut skp = -0.5 * r0 + (f1 - 0.5 * r1) * y;
    let mut sl = r0 + r1 * y;
    let mut slp = 0.5 * a2 * f0 + (r1 + 0.5 * a2 * f1) * y;
    let (mut fm2, mut fm1, mut rm2, mut rm1) = (f0, f1, r0, r1);
    let mut c = y;
    let mut small = 0;
    let mut k = 1usize;
    loop {
        k += 1;
        if k > SERIES_KMAX {
            return Err(Error::NoConvergence { method: "series", iterations: SERIES_KMAX });
        }
        let kf = k as f64;
        let d = kf * kf + a2;
        let f = ((2.0 * kf - 1.0) * fm1 - fm2) / d;
        let r = ((2.0 * kf - 1.0) * rm1 - rm2) / d;
        fm2 = fm1;
        fm1 = f;
        rm2 = rm1;
        rm1 = r;
        c *= y / kf;
        let tk = f * c;
        let tkp = (kf * f - 0.5 * r) * c;
        let tl = r * c;
        let tlp = (kf * r + 0.5 * a2 * f) * c;
        sk += tk;
        skp += tkp;
        sl += tl;
        slp += tlp;
        let negligible = |t: f64, s: f64| t.abs() <= f64::EPSILON * s.abs();
        if negligible(tk, sk) && negligible(tkp, skp) && negligible(tl, sl) && negligible(tlp, slp) {
            small += 1;
            if small >= 3 {
                break;
            }
        } else {
            small = 0;
        }
    }
    // Scaled: K e^{s} with s = λ (x >= a) or aπ/2; 1/n(a) = e^{-aπ/2}/nr
    let nr = reduced_normalization(a);
    let shift = if p.is_monotonic_side() {
        dominant_exponent(p, ExponentKind::LambdaTilde)?
    } else {
        0.0
    };
    let ek = shift.exp() / nr;
    let el = (-shift).exp() * nr;
    let q = FunctionQuad {
        k: sk * ek,
        kp: 2.0 / x * skp * ek,
        l: sl * el,
        lp: 2.0 / x * slp * el,
        scaling: ScalingMode::Scaled,
    };
    Ok(q.from_scaled(p, scaling))
}
