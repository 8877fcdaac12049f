//! Region dispatch, self-check sweep and the unscaled-range boundary.

use std::fmt;

use crate::cf::{cf_accepts, cf_raw, CFConfig, CF_A_MAX};
use crate::domain::{range_guard, FunctionQuad, GuardOutcome, OrderArg, RangeGuardConfig, Region, ScalingMode};
use crate::error::{Error, Result};
use crate::integrals::{mon_scaled, osc_scaled, OscMode};
use crate::largex::{largex_l, LARGEX_TOL};
use crate::series::series_eval;
use crate::uniform::{uniform_eval, zeta_of_z, UniformCoeffTables};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Series,
    CF,
    LargeXL,
    AiryUniform,
    IntegralMon,
    IntegralOscFull,
    IntegralOscSimpl,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Series,
        Method::CF,
        Method::LargeXL,
        Method::AiryUniform,
        Method::IntegralMon,
        Method::IntegralOscFull,
        Method::IntegralOscSimpl,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::CF => "cf",
            Method::LargeXL => "largex_l",
            Method::AiryUniform => "uniform",
            Method::IntegralMon => "mon",
            Method::IntegralOscFull => "osc_full",
            Method::IntegralOscSimpl => "osc_simpl",
        }
    }

    /// Whether the method yields `(K, K')` and `(L, L')` respectively.
    pub fn provides(self) -> (bool, bool) {
        match self {
            Method::CF => (true, false),
            Method::LargeXL => (false, true),
            _ => (true, true),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Which method produced each of `K`, `K'`, `L`, `L'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MethodChoice {
    pub k: Method,
    pub kp: Method,
    pub l: Method,
    pub lp: Method,
}

impl MethodChoice {
    fn pair(k: Method, l: Method) -> Self {
        MethodChoice { k, kp: k, l, lp: l }
    }

    /// `"cf"` when one method did everything, `"cf+largex_l"` otherwise.
    pub fn tag(&self) -> String {
        if self.k == self.l {
            self.k.tag().to_owned()
        } else {
            format!("{}+{}", self.k, self.l)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalReport {
    pub quad: FunctionQuad,
    pub choice: MethodChoice,
    pub guard: GuardOutcome,
    /// Wronskian residual, floored at machine epsilon.
    pub est_accuracy: f64,
}

/// Region-map constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispatchConfig {
    /// Series when `x <= min(series_x_cap, series_slope * max(1, |a|))`.
    pub series_x_cap: f64,
    pub series_slope: f64,
    /// Below this order the turning band is covered by the series.
    pub series_band_a_max: f64,
    pub uniform_a_min: f64,
    pub uniform_radius: f64,
    pub a_simpl: f64,
    pub quad_tol: f64,
    pub cf: CFConfig,
    pub guard: RangeGuardConfig,
}

impl Default for DispatchConfig {
    fn default() -> Self {
        DispatchConfig {
            series_x_cap: 1.5,
            series_slope: 0.4,
            series_band_a_max: 30.0,
            uniform_a_min: crate::uniform::UNIFORM_A_MIN,
            uniform_radius: crate::uniform::UNIFORM_RADIUS,
            a_simpl: crate::integrals::A_SIMPL,
            quad_tol: 1e-15,
            cf: CFConfig::default(),
            guard: RangeGuardConfig::default(),
        }
    }
}

const CBRT2: f64 = 1.259_921_049_894_873_164_8;

impl DispatchConfig {
    fn series_x_max(&self, a: f64) -> f64 {
        self.series_x_cap.min(self.series_slope * a.max(1.0))
    }

    fn uniform_ok(&self, p: &OrderArg) -> bool {
        p.a() >= self.uniform_a_min && zeta_of_z(p.x() / p.a()).abs() / CBRT2 <= self.uniform_radius
    }

    // η > radius on the oscillatory side, whether or not a is large enough for the uniform method
    fn beyond_airy_band(&self, p: &OrderArg) -> bool {
        zeta_of_z(p.x() / p.a()) / CBRT2 > self.uniform_radius
    }

    /// `x/a` where the uniform disk ends, oscillatory side (`η = +r`) and
    /// monotonic side (`η = -r`).
    pub fn uniform_edges(&self) -> (f64, f64) {
        let target = self.uniform_radius * CBRT2;
        // |ζ| grows away from z = 1 on both sides
        let solve = |mut lo: f64, mut hi: f64, below: bool| {
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if (zeta_of_z(mid).abs() > target) == below {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        };
        (solve(1e-6, 1.0, true), solve(1.0, 1e3, false))
    }

    /// Every method the dispatcher may try at `p`, in order of preference.
    pub fn candidates(&self, p: &OrderArg) -> Vec<Method> {
        let mut v: Vec<Method> = Vec::new();
        for (k, l) in self.plans(p) {
            for m in [k, l] {
                if !v.contains(&m) {
                    v.push(m);
                }
            }
        }
        v
    }

    // candidate (K-method, L-method) pairs, preferred first
    fn plans(&self, p: &OrderArg) -> Vec<(Method, Method)> {
        use Method::*;
        let mut v = Vec::new();
        let backstop = match p.region() {
            Region::Oscillatory => Some(IntegralOscFull),
            Region::Monotonic => Some(IntegralMon),
            Region::TurningPoint => None,
        };
        if p.x() <= self.series_x_max(p.a()) {
            v.push((Series, Series));
        }
        match p.region() {
            Region::TurningPoint => {
                if p.a() >= self.uniform_a_min {
                    v.push((AiryUniform, AiryUniform));
                } else if p.a() < self.series_band_a_max {
                    v.push((Series, Series));
                }
            }
            Region::Oscillatory => {
                if self.uniform_ok(p) {
                    v.push((AiryUniform, AiryUniform));
                } else if p.a() >= self.a_simpl && self.beyond_airy_band(p) {
                    v.push((IntegralOscSimpl, IntegralOscSimpl));
                }
            }
            Region::Monotonic => {
                if self.uniform_ok(p) {
                    v.push((AiryUniform, AiryUniform));
                }
                let km = if cf_accepts(p) { CF } else { IntegralMon };
                v.push((km, LargeXL));
                v.push((km, IntegralMon));
            }
        }
        if let Some(b) = backstop {
            v.push((b, b));
        }
        v.dedup();
        v
    }
}

/// Scaled values from one method, no dispatch. Pairs a method does not
/// provide are NaN. Validity is the caller's business, except where the
/// method itself refuses.
pub fn run_method(method: Method, p: &OrderArg, cfg: &DispatchConfig) -> Result<FunctionQuad> {
    let s = ScalingMode::Scaled;
    let (a, x) = (p.a(), p.x());
    let nan = f64::NAN;
    match method {
        Method::Series => series_eval(p, s),
        Method::CF => {
            if a > CF_A_MAX {
                return Err(Error::OutOfValidity { method: "continued fraction" });
            }
            let (k, kp, _) = cf_raw(a, x, &cfg.cf)?;
            Ok(FunctionQuad { k, kp, l: nan, lp: nan, scaling: s })
        }
        Method::LargeXL => {
            let (l, lp) = largex_l(p, LARGEX_TOL)?;
            Ok(FunctionQuad { k: nan, kp: nan, l, lp, scaling: s })
        }
        Method::AiryUniform => {
            let t = UniformCoeffTables::builtin();
            if !cfg.uniform_ok(p) {
                return Err(Error::OutOfValidity { method: "uniform expansion" });
            }
            uniform_eval(p, s, t)
        }
        Method::IntegralMon => {
            if x <= a {
                return Err(Error::OutOfValidity { method: "monotonic integrals" });
            }
            mon_scaled(a, x, cfg.quad_tol)
        }
        Method::IntegralOscFull => {
            if x >= a {
                return Err(Error::OutOfValidity { method: "oscillatory integrals" });
            }
            osc_scaled(a, x, cfg.quad_tol, OscMode::Full)
        }
        Method::IntegralOscSimpl => {
            if x >= a {
                return Err(Error::OutOfValidity { method: "oscillatory integrals" });
            }
            osc_scaled(a, x, cfg.quad_tol, OscMode::Simplified)
        }
    }
}

fn dispatch(p: &OrderArg, cfg: &DispatchConfig) -> Result<(FunctionQuad, MethodChoice)> {
    let mut last = Error::OutOfValidity { method: "dispatch" };
    for (mk, ml) in cfg.plans(p) {
        let kq = match run_method(mk, p, cfg) {
            Ok(q) if q.k.is_finite() && q.kp.is_finite() => q,
            Ok(_) => continue,
            Err(e) => {
                last = e;
                continue;
            }
        };
        let lq = if ml == mk {
            kq
        } else {
            match run_method(ml, p, cfg) {
                Ok(q) => q,
                Err(e) => {
                    last = e;
                    continue;
                }
            }
        };
        if !(lq.l.is_finite() && lq.lp.is_finite()) {
            continue;
        }
        let q = FunctionQuad { k: kq.k, kp: kq.kp, l: lq.l, lp: lq.lp, scaling: ScalingMode::Scaled };
        return Ok((q, MethodChoice::pair(mk, ml)));
    }
    Err(last)
}

/// Evaluate with the default region map.
pub fn evaluate(a: f64, x: f64, scaling: ScalingMode) -> Result<EvalReport> {
    evaluate_with(a, x, scaling, &DispatchConfig::default())
}

pub fn evaluate_with(a: f64, x: f64, scaling: ScalingMode, cfg: &DispatchConfig) -> Result<EvalReport> {
    let p = OrderArg::new(a, x)?;
    let guard = range_guard(&p, &cfg.guard, scaling);
    if guard != GuardOutcome::Ok {
        return Err(Error::Range(guard));
    }
    let (q, choice) = dispatch(&p, cfg)?;
    let est = q.wronskian_residual(p.x()).abs().max(f64::EPSILON);
    Ok(EvalReport { quad: q.from_scaled(&p, scaling), choice, guard, est_accuracy: est })
}

/// `max |Δ|/max(|F|, |F'|)` over the pairs both quads provide.
pub fn envelope_diff(u: &FunctionQuad, v: &FunctionQuad) -> f64 {
    let pair = |f1: f64, d1: f64, f2: f64, d2: f64| {
        if [f1, d1, f2, d2].iter().all(|t| t.is_finite()) {
            let env = f2.abs().max(d2.abs());
            ((f1 - f2).abs().max((d1 - d2).abs()) / env).max(0.0)
        } else {
            0.0
        }
    };
    pair(u.k, u.kp, v.k, v.kp).max(pair(u.l, u.lp, v.l, v.lp))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeamCheck {
    pub name: &'static str,
    pub a: f64,
    pub x: f64,
    pub methods: (Method, Method),
    /// NaN when either method failed.
    pub diff: f64,
}

/// The declared seam strips: series/cf, series/osc, cf/uniform,
/// uniform/osc, uniform/mon and simplified/full, `points` abscissas each.
pub fn seam_checks(cfg: &DispatchConfig, points: usize) -> Vec<SeamCheck> {
    use Method::*;
    let (z_osc, z_mon) = cfg.uniform_edges();
    let mut strips: Vec<(&'static str, f64, f64, f64, Method, Method)> = vec![("series/cf", 1.0, 1.4, 1.6, Series, CF)];
    for a in [1.0, 10.0, 30.0, 100.0] {
        let b = cfg.series_x_max(a);
        let osc = if a >= cfg.a_simpl { IntegralOscSimpl } else { IntegralOscFull };
        strips.push(("series/osc", a, 0.95 * b, 1.05 * b, Series, osc));
    }
    for a in [30.0, 100.0] {
        // a hair inside the disk so the uniform method accepts the edge point
        let (bo, bm) = (z_osc * a * (1.0 + 1e-12), z_mon * a * (1.0 - 1e-12));
        strips.push(("cf/uniform", a, 0.95 * bm, bm, CF, AiryUniform));
        strips.push(("uniform/osc", a, bo, 1.05 * bo, AiryUniform, IntegralOscSimpl));
        strips.push(("uniform/mon", a, 0.95 * bm, bm, AiryUniform, IntegralMon));
        strips.push(("simplified/full", a, 0.475 * a, 0.525 * a, IntegralOscSimpl, IntegralOscFull));
    }
    let mut out = Vec::new();
    for (name, a, lo, hi, m1, m2) in strips {
        for i in 0..points {
            let x = if points == 1 { 0.5 * (lo + hi) } else { lo + (hi - lo) * i as f64 / (points - 1) as f64 };
            let diff = OrderArg::new(a, x)
                .and_then(|p| Ok(envelope_diff(&run_method(m1, &p, cfg)?, &run_method(m2, &p, cfg)?)))
                .unwrap_or(f64::NAN);
            out.push(SeamCheck { name, a, x, methods: (m1, m2), diff });
        }
    }
    out
}

/// Sweep description for [`selfcheck`]: `points` quasi-random points,
/// log-uniform in `a` and `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub points: usize,
    pub seed: u64,
    pub a_min: f64,
    pub a_max: f64,
    pub x_min: f64,
    pub x_max: f64,
    /// Abscissas per seam strip; 0 skips the seams.
    pub seam_points: usize,
    pub seam_tol: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            points: 10_000,
            seed: 0,
            a_min: 1e-3,
            a_max: 200.0,
            x_min: 1e-3,
            x_max: 200.0,
            seam_points: 5,
            seam_tol: 1e-10,
        }
    }
}

// radical inverse of i in base b
fn halton(mut i: u64, b: u64) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    while i > 0 {
        f /= b as f64;
        r += f * (i % b) as f64;
        i /= b;
    }
    r
}

impl GridSpec {
    /// The sweep points, Halton bases 2 and 3 starting at index `seed + 1`.
    pub fn grid(&self) -> Vec<(f64, f64)> {
        let la = (self.a_min.ln(), self.a_max.ln());
        let lx = (self.x_min.ln(), self.x_max.ln());
        (0..self.points as u64)
            .map(|i| {
                let j = i + self.seed + 1;
                let a = (la.0 + (la.1 - la.0) * halton(j, 2)).exp();
                let x = (lx.0 + (lx.1 - lx.0) * halton(j, 3)).exp();
                (a, x)
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ResidualStats {
    pub count: usize,
    pub max: f64,
    pub median: f64,
}

impl ResidualStats {
    pub fn from_values(mut v: Vec<f64>) -> Self {
        if v.is_empty() {
            return ResidualStats::default();
        }
        v.sort_by(|a, b| a.total_cmp(b));
        let n = v.len();
        let median = if n % 2 == 1 { v[n / 2] } else { 0.5 * (v[n / 2 - 1] + v[n / 2]) };
        ResidualStats { count: n, max: v[n - 1], median }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelfcheckReport {
    pub tol: f64,
    pub seam_tol: f64,
    pub overall: ResidualStats,
    pub by_region: Vec<(Region, ResidualStats)>,
    /// The worst point, if any.
    pub worst: Option<(f64, f64, f64, MethodChoice)>,
    pub seams: Vec<SeamCheck>,
    pub errors: Vec<(f64, f64, String)>,
}

impl SelfcheckReport {
    pub fn passed(&self) -> bool {
        self.errors.is_empty()
            && self.overall.max <= self.tol
            && self.seams.iter().all(|s| s.diff <= self.seam_tol)
    }
}

/// Wronskian residuals over the grid (scaled mode) and the seam strips.
pub fn selfcheck(spec: &GridSpec, tol: f64) -> SelfcheckReport {
    selfcheck_with(spec, tol, &DispatchConfig::default())
}

pub fn selfcheck_with(spec: &GridSpec, tol: f64, cfg: &DispatchConfig) -> SelfcheckReport {
    type Row = (f64, f64, Result<(Region, f64, MethodChoice)>);
    let pts = spec.grid();
    let eval = |&(a, x): &(f64, f64)| -> Row {
        let r = evaluate_with(a, x, ScalingMode::Scaled, cfg).and_then(|rep| {
            let p = OrderArg::new(a, x)?;
            Ok((p.region(), rep.quad.wronskian_residual(x).abs(), rep.choice))
        });
        (a, x, r)
    };
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(16);
    let chunk = pts.len().div_ceil(threads).max(1);
    let rows: Vec<Row> = std::thread::scope(|s| {
        let handles: Vec<_> = pts.chunks(chunk).map(|c| s.spawn(move || c.iter().map(eval).collect::<Vec<_>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("selfcheck worker")).collect()
    });

    let mut all = Vec::new();
    let mut regions: Vec<(Region, Vec<f64>)> =
        vec![(Region::Monotonic, vec![]), (Region::Oscillatory, vec![]), (Region::TurningPoint, vec![])];
    let mut errors = Vec::new();
    let mut worst: Option<(f64, f64, f64, MethodChoice)> = None;
    for (a, x, r) in rows {
        match r {
            Ok((reg, w, choice)) => {
                all.push(w);
                if let Some((_, v)) = regions.iter_mut().find(|(g, _)| *g == reg) {
                    v.push(w);
                }
                if worst.map_or(true, |(_, _, m, _)| !(w <= m)) {
                    worst = Some((a, x, w, choice));
                }
            }
            Err(e) => errors.push((a, x, e.to_string())),
        }
    }
    let seams = if spec.points > 0 && spec.seam_points > 0 { seam_checks(cfg, spec.seam_points) } else { Vec::new() };
    SelfcheckReport {
        tol,
        seam_tol: spec.seam_tol,
        overall: ResidualStats::from_values(all),
        by_region: regions.into_iter().map(|(g, v)| (g, ResidualStats::from_values(v))).collect(),
        worst,
        seams,
        errors,
    }
}

/// Boundary of the unscaled range for decimal exponent `limit`: points
/// `(a, x)` on `λ(a, x) = limit ln 10` for `x >= a`, then the vertical
/// segment `a = a_max` down to `x = 0`.
pub fn region_map(limit: f64, steps: usize) -> Vec<(f64, f64)> {
    let cfg = RangeGuardConfig::from_decimal_exponent(limit);
    let ll = cfg.log_limit;
    let a_max = cfg.a_max();
    let steps = steps.max(1);
    let lambda = |a: f64, x: f64| {
        let s = ((x - a) * (x + a)).sqrt();
        s + a * a.atan2(s)
    };
    let mut out = Vec::with_capacity(2 * steps + 2);
    for i in 0..=steps {
        let a = a_max * i as f64 / steps as f64;
        // λ(a, ·) increases from aπ/2 at x = a, and λ >= x
        let (mut lo, mut hi) = (a, ll.max(a));
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if lambda(a, mid) < ll {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        out.push((a, 0.5 * (lo + hi)));
    }
    for i in 1..=steps {
        out.push((a_max, a_max * (1.0 - i as f64 / steps as f64)));
    }
    out
}
