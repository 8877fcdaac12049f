#![allow(dead_code)]

use std::path::PathBuf;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

/// Rows of a tab-separated fixture, comment lines skipped.
pub fn rows(name: &str) -> Vec<Vec<String>> {
    let text = std::fs::read_to_string(fixture(name)).expect("fixture readable");
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| l.split('\t').map(str::to_owned).collect())
        .collect()
}

pub fn numeric_rows(name: &str) -> Vec<Vec<f64>> {
    rows(name)
        .into_iter()
        .map(|r| r.iter().map(|v| v.parse().expect("number")).collect())
        .collect()
}

pub struct OraclePoint {
    pub a: f64,
    pub x: f64,
    /// Scaled K, K', L, L'.
    pub vals: [f64; 4],
}

pub fn oracle_points() -> Vec<OraclePoint> {
    numeric_rows("functions.tsv")
        .into_iter()
        .map(|r| OraclePoint { a: r[0], x: r[1], vals: [r[2], r[3], r[4], r[5]] })
        .collect()
}

/// `(arg1, arg2, value)` rows of misc.tsv with the given name.
pub fn misc(name: &str) -> Vec<(f64, f64, f64)> {
    rows("misc.tsv")
        .into_iter()
        .filter(|r| r[0] == name)
        .map(|r| (r[1].parse().unwrap(), r[2].parse().unwrap(), r[3].parse().unwrap()))
        .collect()
}

pub fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

/// Error of `got` against the oracle quad, relative to the envelope
/// `max(|K|, |K'|/scale)` so oscillation zeros do not dominate.
pub fn envelope_err(got: [f64; 4], want: [f64; 4]) -> [f64; 4] {
    let ek = want[0].abs().max(want[1].abs()).max(f64::MIN_POSITIVE);
    let el = want[2].abs().max(want[3].abs()).max(f64::MIN_POSITIVE);
    [
        (got[0] - want[0]).abs() / ek,
        (got[1] - want[1]).abs() / ek,
        (got[2] - want[2]).abs() / el,
        (got[3] - want[3]).abs() / el,
    ]
}
