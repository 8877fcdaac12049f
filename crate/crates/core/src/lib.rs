//! Modified Bessel functions of imaginary order.
//!
//! Evaluates the pair `K_{ia}(x)`, `L_{ia}(x)` and their `x`-derivatives,
//! unscaled or with the dominant exponential factor removed.

pub mod airy;
pub mod cf;
pub mod domain;
pub mod driver;
pub mod error;
pub mod integrals;
pub mod largex;
pub mod quadrature;
pub mod series;
pub mod uniform;

pub use domain::{
    dominant_exponent, range_guard, scale_factor_log, stable_kernels, ExponentKind, Family,
    FunctionQuad, GuardOutcome, OrderArg, RangeGuardConfig, Region, ScalingMode, DELTA_TP,
};
pub use error::{Error, Result};
pub use quadrature::{de_finite, de_semiinfinite, QuadConfig, QuadResult};
pub use series::{coulomb_phase0, normalization, series_eval, series_seeds, SeriesCoeffState};
pub use cf::{cf_eval, CFConfig};
pub use largex::{hankel_symbols, largex_eval, HankelSeq};
pub use airy::{airy_eval, airy_scaled, AiryQuad};
pub use uniform::{phi_chi, uniform_eval, zeta_of_z, TurningVars, UniformCoeffTables};
pub use integrals::{mon_eval, osc_eval, OscMode, OscPath, A_SIMPL};
pub use driver::{
    envelope_diff, evaluate, evaluate_with, region_map, run_method, seam_checks, selfcheck, selfcheck_with, DispatchConfig,
    EvalReport, GridSpec, Method, MethodChoice, SeamCheck, SelfcheckReport,
};
