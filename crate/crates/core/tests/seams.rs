use std::collections::BTreeMap;

use imbessel::*;

const SEAMS: [&str; 6] = ["series/cf", "series/osc", "cf/uniform", "uniform/osc", "uniform/mon", "simplified/full"];

#[test]
fn every_seam_within_tolerance() {
    let checks = seam_checks(&DispatchConfig::default(), 21);
    let mut worst: BTreeMap<&str, f64> = BTreeMap::new();
    for c in &checks {
        assert!(!c.diff.is_nan(), "{} failed to evaluate at a={} x={}", c.name, c.a, c.x);
        let w = worst.entry(c.name).or_insert(0.0);
        *w = w.max(c.diff);
    }
    for name in SEAMS {
        let w = worst.get(name).copied().unwrap_or_else(|| panic!("seam {name} missing"));
        println!("{name}\t{w:.3e}");
        assert!(w <= 1e-10, "{name}: {w:e}");
    }
}

// On the monotonic side nothing oscillates, so the plain pointwise
// relative difference must be small too.
#[test]
fn monotonic_seams_pointwise() {
    let cfg = DispatchConfig::default();
    for c in seam_checks(&cfg, 11) {
        if !matches!(c.name, "series/cf" | "cf/uniform" | "uniform/mon") {
            continue;
        }
        let p = OrderArg::new(c.a, c.x).unwrap();
        let u = run_method(c.methods.0, &p, &cfg).unwrap();
        let v = run_method(c.methods.1, &p, &cfg).unwrap();
        for (f, g) in [(u.k, v.k), (u.kp, v.kp), (u.l, v.l), (u.lp, v.lp)] {
            if f.is_nan() || g.is_nan() {
                continue;
            }
            assert!(((f - g) / g).abs() <= 1e-10, "{} a={} x={} {f} vs {g}", c.name, c.a, c.x);
        }
    }
}

#[test]
fn seam_abscissas_straddle_switch() {
    // each series/osc strip covers the series boundary x = min(1.5, 0.4 max(1, a))
    for c in seam_checks(&DispatchConfig::default(), 2).iter().filter(|c| c.name == "series/osc") {
        let b = 1.5f64.min(0.4 * c.a.max(1.0));
        assert!((c.x / b - 0.95).abs() < 1e-12 || (c.x / b - 1.05).abs() < 1e-12);
    }
}
