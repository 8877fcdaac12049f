use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use imbessel::{evaluate, region_map, selfcheck, Error, EvalReport, GridSpec, ScalingMode};

#[derive(Parser)]
#[command(name = "imbessel", version, about = "Modified Bessel functions K_{ia}(x), L_{ia}(x) of imaginary order")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate K, K', L, L' at one point.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        /// Remove the dominant exponential factors.
        #[arg(long)]
        scaled: bool,
    },
    /// Evaluate on a rectangular grid (linear spacing), one TSV row per point.
    Table {
        #[arg(long, allow_hyphen_values = true)]
        a_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        a_max: f64,
        #[arg(long)]
        a_steps: usize,
        #[arg(long, allow_hyphen_values = true)]
        x_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        x_max: f64,
        #[arg(long)]
        x_steps: usize,
        #[arg(long)]
        scaled: bool,
    },
    /// Wronskian sweep over quasi-random points plus the method seams.
    Selfcheck {
        #[arg(long, default_value_t = 1e-11)]
        tol: f64,
        #[arg(long, default_value_t = 10_000)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Boundary of the unscaled range for the given decimal exponent.
    RegionMap {
        #[arg(long)]
        limit: f64,
        #[arg(long, default_value_t = 100)]
        steps: usize,
    },
}

/// Scientific notation with 16 digits after the point and a two-digit exponent.
fn sci(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    let s = format!("{v:.16e}");
    let (m, e) = s.split_once('e').expect("exponent");
    let e: i32 = e.parse().expect("exponent");
    let sign = if e < 0 { '-' } else { '+' };
    format!("{m}e{sign}{:02}", e.abs())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Domain(_) => 2,
        Error::Range(_) => 3,
        Error::NoConvergence { .. } | Error::AccuracyLoss { .. } | Error::OutOfValidity { .. } => 4,
    }
}

fn scaling_of(scaled: bool) -> ScalingMode {
    if scaled {
        ScalingMode::Scaled
    } else {
        ScalingMode::Unscaled
    }
}

fn scaling_tag(s: ScalingMode) -> &'static str {
    match s {
        ScalingMode::Scaled => "scaled",
        ScalingMode::Unscaled => "unscaled",
    }
}

fn row(a: f64, x: f64, r: &EvalReport) -> String {
    let q = &r.quad;
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        sci(a),
        sci(x),
        sci(q.k),
        sci(q.kp),
        sci(q.l),
        sci(q.lp),
        scaling_tag(q.scaling),
        r.choice.tag()
    )
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![lo],
        _ => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
    }
}

fn run(cmd: Cmd) -> io::Result<u8> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cmd {
        Cmd::Eval { a, x, scaled } => match evaluate(a, x, scaling_of(scaled)) {
            Ok(r) => {
                let q = &r.quad;
                writeln!(
                    out,
                    "a={}\tx={}\tK={}\tKp={}\tL={}\tLp={}\tscaling={}\tmethod={}",
                    sci(a),
                    sci(x),
                    sci(q.k),
                    sci(q.kp),
                    sci(q.l),
                    sci(q.lp),
                    scaling_tag(q.scaling),
                    r.choice.tag()
                )?;
                Ok(0)
            }
            Err(e) => {
                eprintln!("imbessel: {e}");
                Ok(exit_code(&e))
            }
        },
        Cmd::Table { a_min, a_max, a_steps, x_min, x_max, x_steps, scaled } => {
            let mut code = 0;
            writeln!(out, "a\tx\tK\tKp\tL\tLp\tscaling\tmethod")?;
            for a in linspace(a_min, a_max, a_steps) {
                for x in linspace(x_min, x_max, x_steps) {
                    match evaluate(a, x, scaling_of(scaled)) {
                        Ok(r) => writeln!(out, "{}", row(a, x, &r))?,
                        Err(e) => {
                            eprintln!("imbessel: a={a} x={x}: {e}");
                            if code == 0 {
                                code = exit_code(&e);
                            }
                        }
                    }
                }
            }
            Ok(code)
        }
        Cmd::Selfcheck { tol, points, seed } => {
            let spec = GridSpec { points, seed, ..GridSpec::default() };
            let r = selfcheck(&spec, tol);
            writeln!(out, "region\tcount\tmax\tmedian")?;
            writeln!(out, "all\t{}\t{}\t{}", r.overall.count, sci(r.overall.max), sci(r.overall.median))?;
            for (g, s) in &r.by_region {
                writeln!(out, "{g:?}\t{}\t{}\t{}", s.count, sci(s.max), sci(s.median))?;
            }
            if let Some((a, x, w, c)) = r.worst {
                writeln!(out, "worst\t{}\t{}\t{}\t{}", sci(a), sci(x), sci(w), c.tag())?;
            }
            for s in &r.seams {
                writeln!(out, "seam\t{}\t{}\t{}\t{}", s.name, sci(s.a), sci(s.x), sci(s.diff))?;
            }
            for (a, x, e) in &r.errors {
                eprintln!("imbessel: a={a} x={x}: {e}");
            }
            let ok = r.passed();
            writeln!(out, "{}", if ok { "PASS" } else { "FAIL" })?;
            Ok(if ok { 0 } else { 1 })
        }
        Cmd::RegionMap { limit, steps } => {
            if !(limit > 0.0) {
                eprintln!("imbessel: --limit must be positive");
                return Ok(2);
            }
            writeln!(out, "a\tx")?;
            for (a, x) in region_map(limit, steps) {
                writeln!(out, "{}\t{}", sci(a), sci(x))?;
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(c) => ExitCode::from(c),
        Err(e) => {
            eprintln!("imbessel: {e}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sci_format() {
        assert_eq!(sci(0.421_024_438_240_708_333_34), "4.2102443824070834e-01");
        assert_eq!(sci(1.0), "1.0000000000000000e+00");
        assert_eq!(sci(-2.5e-300), "-2.5000000000000000e-300");
    }
}
