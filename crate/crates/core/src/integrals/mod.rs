//! Integral representations along steepest-descent paths.

pub mod mon;
pub mod osc;

pub use mon::{mon_eval, mon_phi, mon_scaled, mon_sigma, MonPath};
pub use osc::{osc_eval, osc_invert_sigma, osc_scaled, osc_sigma_tau, OscMode, OscPath, A_SIMPL};

// Σ_{k>=1} s^k u^{2k+1}/(2k+1)!, i.e. sin u - u (s = -1) or sinh u - u (s = 1)
fn odd_tail(u: f64, s: f64) -> f64 {
    if u.abs() >= 0.5 {
        return if s < 0.0 { u.sin() - u } else { u.sinh() - u };
    }
    let u2 = u * u;
    let mut t = s * u * u2 / 6.0;
    let mut acc = 0.0f64;
    let mut k = 1.0;
    loop {
        acc += t;
        if t.abs() <= 1e-18 * acc.abs() {
            return acc;
        }
        t *= s * u2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
        k += 1.0;
    }
}

pub(crate) fn sin_minus(u: f64) -> f64 {
    odd_tail(u, -1.0)
}

pub(crate) fn sinh_minus(u: f64) -> f64 {
    odd_tail(u, 1.0)
}
