//! Point sets shared by the benchmarks.

/// Representative `(a, x)` points, labelled by the method tag the default
/// dispatcher reports there.
pub const REGION_POINTS: &[(&str, f64, f64)] = &[
    ("series", 1.0, 0.3),
    ("cf+largex_l", 5.0, 60.0),
    ("cf+mon", 10.0, 14.0),
    ("mon", 150.0, 500.0),
    ("osc_full", 10.0, 5.0),
    ("osc_simpl", 28.0, 5.0),
    ("uniform", 100.0, 100.0),
];

/// Log-spaced values in `[lo, hi]`.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let (l, h) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (l + (h - l) * i as f64 / (n - 1) as f64).exp())
        .collect()
}
