//! Airy functions of real argument.
//!
//! `|t| >= 10`: asymptotic expansions. `|t| < 10`: Taylor expansion of
//! `y'' = t y` about the nearest point of a table spaced 1/4 apart. The
//! table is built once by stepping the same Taylor series from `t = 0` (and,
//! for `Ai` on `t > 0`, backwards from the asymptotic value at `t = 10`, the
//! stable direction for the recessive solution).

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryQuad {
    pub ai: f64,
    pub aip: f64,
    pub bi: f64,
    pub bip: f64,
}

impl AiryQuad {
    /// `π (Ai Bi' - Ai' Bi) - 1`; valid for scaled values too.
    pub fn wronskian_residual(&self) -> f64 {
        PI * (self.ai * self.bip - self.aip * self.bi) - 1.0
    }
}

const AI0: f64 = 0.355_028_053_887_817_239_3;
const AIP0: f64 = -0.258_819_403_792_806_798_4;
const BI0: f64 = 0.614_926_627_446_000_735_2;
const BIP0: f64 = 0.448_288_357_353_826_357_9;

const T_ASYMP: f64 = 10.0;
const STEP: f64 = 0.25;
const N_SIDE: usize = 40; // T_ASYMP / STEP

// y(t0 + d), y'(t0 + d) from y(t0), y'(t0) for y'' = t y
fn taylor(t0: f64, y0: f64, y1: f64, d: f64) -> (f64, f64) {
    let mut cm1 = 0.0; // c_{n-1}
    let mut c0 = y0; // c_n
    let mut c1 = y1; // c_{n+1}
    let mut dn = 1.0; // d^n
    let mut y = 0.0;
    let mut yp = 0.0;
    let mut n = 0usize;
    loop {
        let nf = n as f64;
        let ty = c0 * dn;
        y += ty;
        yp += (nf + 1.0) * c1 * dn;
        let c2 = (t0 * c0 + cm1) / ((nf + 2.0) * (nf + 1.0));
        cm1 = c0;
        c0 = c1;
        c1 = c2;
        dn *= d;
        n += 1;
        let scale = y.abs().max(yp.abs() * d.abs());
        if n > 6 && (c0 * dn).abs() + (c1 * dn * d).abs() <= 1e-19 * scale.max(f64::MIN_POSITIVE) {
            break;
        }
        if n > 80 || dn == 0.0 {
            break;
        }
    }
    (y, yp)
}

#[derive(Debug, Clone, Copy)]
struct Anchor {
    ai: f64,
    aip: f64,
    bi: f64,
    bip: f64,
}

// anchors at t = (i - N_SIDE) * STEP, i = 0..=2 N_SIDE
fn anchors() -> &'static [Anchor] {
    static TABLE: OnceLock<Vec<Anchor>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = 2 * N_SIDE + 1;
        let mut tab = vec![Anchor { ai: 0.0, aip: 0.0, bi: 0.0, bip: 0.0 }; n];
        tab[N_SIDE] = Anchor { ai: AI0, aip: AIP0, bi: BI0, bip: BIP0 };
        // negative side, both functions outward
        for i in (0..N_SIDE).rev() {
            let t0 = (i as f64 + 1.0 - N_SIDE as f64) * STEP;
            let p = tab[i + 1];
            let (ai, aip) = taylor(t0, p.ai, p.aip, -STEP);
            let (bi, bip) = taylor(t0, p.bi, p.bip, -STEP);
            tab[i] = Anchor { ai, aip, bi, bip };
        }
        // positive side: Bi outward
        for i in N_SIDE + 1..n {
            let t0 = (i as f64 - 1.0 - N_SIDE as f64) * STEP;
            let p = tab[i - 1];
            let (bi, bip) = taylor(t0, p.bi, p.bip, STEP);
            tab[i].bi = bi;
            tab[i].bip = bip;
        }
        // positive side: Ai inward from the asymptotic value
        let top = asymptotic_positive(T_ASYMP);
        let e = (-2.0 / 3.0 * T_ASYMP * T_ASYMP.sqrt()).exp();
        tab[n - 1].ai = top.ai * e;
        tab[n - 1].aip = top.aip * e;
        for i in (N_SIDE + 1..n - 1).rev() {
            let t0 = (i as f64 + 1.0 - N_SIDE as f64) * STEP;
            let p = tab[i + 1];
            let (ai, aip) = taylor(t0, p.ai, p.aip, -STEP);
            tab[i].ai = ai;
            tab[i].aip = aip;
        }
        tab
    })
}

fn u_coeffs() -> &'static [(f64, f64)] {
    static U: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    U.get_or_init(|| {
        let mut v = vec![(1.0, 1.0)];
        let mut u = 1.0;
        for k in 1..60 {
            let kf = k as f64;
            u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf);
            v.push((u, -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u));
        }
        v
    })
}

// scaled values for t >= T_ASYMP
fn asymptotic_positive(t: f64) -> AiryQuad {
    let xi = 2.0 / 3.0 * t * t.sqrt();
    let r = 1.0 / xi;
    let (mut sa, mut sap, mut sb, mut sbp) = (0.0, 0.0, 0.0, 0.0);
    let mut p = 1.0;
    let mut prev = f64::INFINITY;
    for (k, &(u, v)) in u_coeffs().iter().enumerate() {
        let tu = u * p;
        let tv = v * p;
        let m = tu.abs().max(tv.abs());
        if m > prev || m < 1e-18 {
            break;
        }
        prev = m;
        let s = if k % 2 == 0 { 1.0 } else { -1.0 };
        sa += s * tu;
        sap += s * tv;
        sb += tu;
        sbp += tv;
        p *= r;
    }
    let q = t.sqrt().sqrt();
    let rp = PI.sqrt();
    AiryQuad {
        ai: sa / (2.0 * rp * q),
        aip: -q * sap / (2.0 * rp),
        bi: sb / (rp * q),
        bip: q * sbp / rp,
    }
}

// t = -s, s >= T_ASYMP
fn asymptotic_negative(s: f64) -> AiryQuad {
    let z = 2.0 / 3.0 * s * s.sqrt();
    let r = 1.0 / z;
    let (mut pp, mut qq, mut rr, mut ss) = (0.0, 0.0, 0.0, 0.0);
    let mut p = 1.0;
    let mut prev = f64::INFINITY;
    for (k, &(u, v)) in u_coeffs().iter().enumerate() {
        let tu = u * p;
        let tv = v * p;
        let m = tu.abs().max(tv.abs());
        if m > prev || m < 1e-18 {
            break;
        }
        prev = m;
        let sg = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            pp += sg * tu;
            rr += sg * tv;
        } else {
            qq += sg * tu;
            ss += sg * tv;
        }
        p *= r;
    }
    let (sz, cz) = z.sin_cos();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let sp = (sz + cz) * h; // sin(z + π/4)
    let cp = (cz - sz) * h; // cos(z + π/4)
    let q = s.sqrt().sqrt();
    let rp = PI.sqrt();
    AiryQuad {
        ai: (sp * pp - cp * qq) / (rp * q),
        bi: (cp * pp + sp * qq) / (rp * q),
        aip: -q * (cp * rr + sp * ss) / rp,
        bip: q * (sp * rr - cp * ss) / rp,
    }
}

fn from_table(t: f64) -> AiryQuad {
    let tab = anchors();
    let i = ((t / STEP).round() as i64 + N_SIDE as i64).clamp(0, 2 * N_SIDE as i64) as usize;
    let t0 = (i as f64 - N_SIDE as f64) * STEP;
    let a = tab[i];
    let d = t - t0;
    let (ai, aip) = taylor(t0, a.ai, a.aip, d);
    let (bi, bip) = taylor(t0, a.bi, a.bip, d);
    AiryQuad { ai, aip, bi, bip }
}

/// `Ai`, `Ai'`, `Bi`, `Bi'` at `t`. Fails when `Bi` overflows.
pub fn airy_eval(t: f64) -> Result<AiryQuad> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("Airy argument {t} is not finite")));
    }
    if t >= T_ASYMP {
        let xi = 2.0 / 3.0 * t * t.sqrt();
        let s = asymptotic_positive(t);
        let (em, ep) = ((-xi).exp(), xi.exp());
        let q = AiryQuad { ai: s.ai * em, aip: s.aip * em, bi: s.bi * ep, bip: s.bip * ep };
        if !q.bip.is_finite() {
            return Err(Error::Domain(format!("Bi({t}) overflows")));
        }
        return Ok(q);
    }
    if t <= -T_ASYMP {
        return Ok(asymptotic_negative(-t));
    }
    Ok(from_table(t))
}

/// For `t > 0`: `Ai e^{ξ}`, `Ai' e^{ξ}`, `Bi e^{-ξ}`, `Bi' e^{-ξ}` with
/// `ξ = (2/3) t^{3/2}`; for `t <= 0` the plain values.
pub fn airy_scaled(t: f64) -> Result<AiryQuad> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("Airy argument {t} is not finite")));
    }
    if t >= T_ASYMP {
        return Ok(asymptotic_positive(t));
    }
    if t <= -T_ASYMP {
        return Ok(asymptotic_negative(-t));
    }
    let q = from_table(t);
    if t <= 0.0 {
        return Ok(q);
    }
    let xi = 2.0 / 3.0 * t * t.sqrt();
    let (ep, em) = (xi.exp(), (-xi).exp());
    Ok(AiryQuad { ai: q.ai * ep, aip: q.aip * ep, bi: q.bi * em, bip: q.bip * em })
}
