//! Airy-type expansions for large `a`, uniform across the turning point `x = a`.
//!
//! The coefficient functions are stored as Maclaurin series in
//! `η = 2^{-1/3} ζ` (see `data/gen_uniform_coeffs.py`).

use std::sync::OnceLock;

use crate::airy::{airy_scaled, AiryQuad};
use crate::domain::{FunctionQuad, OrderArg, ScalingMode};
use crate::error::{Error, Result};

const CBRT2: f64 = 1.259_921_049_894_873_164_8;

pub const UNIFORM_A_MIN: f64 = 30.0;
pub const UNIFORM_RADIUS: f64 = 1.2;

static RAW: &str = include_str!("../data/uniform_coeffs.txt");

/// Maclaurin coefficients in `η` of `φ`, `χ`, `a_s`, `b_s`, `c_s`, `d_s`
/// (`s = 0..3`) and of `η(w)`, `w = z - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct UniformCoeffTables {
    pub phi: Vec<f64>,
    pub chi: Vec<f64>,
    pub a: [Vec<f64>; 4],
    pub b: [Vec<f64>; 4],
    pub c: [Vec<f64>; 4],
    pub d: [Vec<f64>; 4],
    pub eta_of_w: Vec<f64>,
    pub radius: f64,
}

impl UniformCoeffTables {
    pub fn parse(text: &str) -> Result<Self> {
        let mut sections: Vec<(String, Vec<f64>)> = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                sections.push((name.to_owned(), Vec::new()));
                continue;
            }
            let v: f64 = line
                .parse()
                .map_err(|_| Error::Domain(format!("coefficient table line {}: {line:?}", n + 1)))?;
            match sections.last_mut() {
                Some((_, vals)) => vals.push(v),
                None => return Err(Error::Domain("coefficient before first section".into())),
            }
        }
        let mut take = |name: &str| -> Result<Vec<f64>> {
            let i = sections
                .iter()
                .position(|(n, _)| n == name)
                .ok_or_else(|| Error::Domain(format!("missing section [{name}]")))?;
            Ok(sections.swap_remove(i).1)
        };
        let mut four = |p: &str| -> Result<[Vec<f64>; 4]> {
            Ok([take(&format!("{p} 0"))?, take(&format!("{p} 1"))?, take(&format!("{p} 2"))?, take(&format!("{p} 3"))?])
        };
        let a = four("a")?;
        let b = four("b")?;
        let c = four("c")?;
        let d = four("d")?;
        Ok(UniformCoeffTables {
            phi: take("phi")?,
            chi: take("chi")?,
            a,
            b,
            c,
            d,
            eta_of_w: take("eta_of_w")?,
            radius: UNIFORM_RADIUS,
        })
    }

    /// The tables shipped with the crate.
    pub fn builtin() -> &'static UniformCoeffTables {
        static T: OnceLock<UniformCoeffTables> = OnceLock::new();
        T.get_or_init(|| UniformCoeffTables::parse(RAW).expect("embedded coefficient table"))
    }
}

pub fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &v| acc * x + v)
}

// Maclaurin coefficients of the derivative.
pub fn derivative(c: &[f64]) -> Vec<f64> {
    c.iter().enumerate().skip(1).map(|(k, v)| k as f64 * v).collect()
}

/// `ζ(z)`, decreasing, with `ζ(1) = 0`.
pub fn zeta_of_z(z: f64) -> f64 {
    let w = z - 1.0;
    if w.abs() < 0.25 {
        return CBRT2 * horner(&UniformCoeffTables::builtin().eta_of_w, w);
    }
    if z < 1.0 {
        // ln((1 + s)/z) - s = atanh(s) - s
        let s = ((1.0 - z) * (1.0 + z)).sqrt();
        let r = if z > 0.0 { ((1.0 + s) / z).ln() - s } else { f64::INFINITY };
        (1.5 * r).powf(2.0 / 3.0)
    } else {
        let s = ((z - 1.0) * (z + 1.0)).sqrt();
        -(1.5 * (s - s.atan())).powf(2.0 / 3.0)
    }
}

/// `(φ(ζ), χ(ζ) = φ'(ζ)/φ(ζ))`.
pub fn phi_chi(z: f64, zeta: f64) -> (f64, f64) {
    let eta = zeta / CBRT2;
    if eta.abs() < 0.5 {
        let t = UniformCoeffTables::builtin();
        return (horner(&t.phi, eta), horner(&t.chi, eta));
    }
    let q = (1.0 - z) * (1.0 + z);
    let phi = (4.0 * zeta / q).sqrt().sqrt();
    let chi = 0.25 * (1.0 / zeta - z * z * phi * phi / q);
    (phi, chi)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TurningVars {
    pub z: f64,
    pub zeta: f64,
    pub eta: f64,
    pub phi: f64,
    pub chi: f64,
}

impl TurningVars {
    pub fn new(z: f64) -> Self {
        let zeta = zeta_of_z(z);
        let (phi, chi) = phi_chi(z, zeta);
        TurningVars { z, zeta, eta: zeta / CBRT2, phi, chi }
    }
}

/// `F_a`, `G_a`, `P_a`, `Q_a` at `η` from four terms each.
pub fn fgpq(t: &UniformCoeffTables, a: f64, eta: f64) -> [f64; 4] {
    let r = 1.0 / (a * a);
    let mut out = [0.0; 4];
    for (o, tab) in out.iter_mut().zip([&t.a, &t.b, &t.c, &t.d]) {
        let mut p = 1.0;
        for (s, c) in tab.iter().enumerate() {
            let sg = if s % 2 == 0 { 1.0 } else { -1.0 };
            *o += sg * horner(c, eta) * p;
            p *= r;
        }
    }
    out
}

/// Orders `a^{-8}` and beyond of `F P - G Q/a² - 1`, i.e. the part of the
/// residual not cancelled by construction of four-term truncations.
pub fn identity_tail(t: &UniformCoeffTables, a: f64, eta: f64) -> f64 {
    let av: Vec<f64> = t.a.iter().map(|c| horner(c, eta)).collect();
    let bv: Vec<f64> = t.b.iter().map(|c| horner(c, eta)).collect();
    let cv: Vec<f64> = t.c.iter().map(|c| horner(c, eta)).collect();
    let dv: Vec<f64> = t.d.iter().map(|c| horner(c, eta)).collect();
    let r = 1.0 / (a * a);
    let mut tail = 0.0;
    for s in 0..4 {
        for j in 0..4 {
            let sg = if (s + j) % 2 == 0 { 1.0 } else { -1.0 };
            if s + j >= 4 {
                tail += sg * av[s] * cv[j] * r.powi((s + j) as i32);
            }
            if s + j + 1 >= 4 {
                tail -= sg * bv[s] * dv[j] * r.powi((s + j + 1) as i32);
            }
        }
    }
    tail
}

pub fn uniform_accepts(p: &OrderArg, t: &UniformCoeffTables) -> bool {
    p.a() >= UNIFORM_A_MIN && zeta_of_z(p.x() / p.a()).abs() / CBRT2 <= t.radius
}

pub fn uniform_eval(p: &OrderArg, scaling: ScalingMode, t: &UniformCoeffTables) -> Result<FunctionQuad> {
    let (a, x) = (p.a(), p.x());
    if a < UNIFORM_A_MIN {
        return Err(Error::OutOfValidity { method: "uniform expansion" });
    }
    let v = TurningVars::new(x / a);
    if v.eta.abs() > t.radius {
        return Err(Error::OutOfValidity { method: "uniform expansion" });
    }
    let [f, g, pp, qq] = fgpq(t, a, v.eta);
    let a13 = a.cbrt();
    let a23 = a13 * a13;
    let arg = -a23 * v.zeta;
    // scaled Airy values cancel e^{±λ̃} exactly on the monotonic side
    let AiryQuad { ai, aip, bi, bip } = airy_scaled(arg)?;
    let a43 = a23 * a23;
    let pi = std::f64::consts::PI;
    let k = pi * v.phi / a13 * (ai * f + aip * g / a43);
    let l = 0.5 * v.phi / a13 * (bi * f + bip * g / a43);
    let dk = 2.0 * pi / (v.z * a23 * v.phi) * (aip * pp + ai * qq / a23);
    let dl = 1.0 / (v.z * a23 * v.phi) * (bip * pp + bi * qq / a23);
    Ok(FunctionQuad { k, kp: dk, l, lp: dl, scaling: ScalingMode::Scaled }.from_scaled(p, scaling))
}
