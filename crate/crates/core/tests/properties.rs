use imbessel::*;
use proptest::prelude::*;

// log-uniform in [lo, hi]
fn log_uniform(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (0.0..1.0f64).prop_map(move |u| lo * (hi / lo).powf(u))
}

fn signed(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (log_uniform(lo, hi), any::<bool>()).prop_map(|(v, neg)| if neg { -v } else { v })
}

fn ulps(a: f64, b: f64) -> u64 {
    if a == b {
        return 0;
    }
    if a.signum() != b.signum() {
        return u64::MAX;
    }
    (a.abs().to_bits() as i64 - b.abs().to_bits() as i64).unsigned_abs()
}

fn bits(q: &FunctionQuad) -> [u64; 4] {
    [q.k.to_bits(), q.kp.to_bits(), q.l.to_bits(), q.lp.to_bits()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn even_in_order(a in signed(1e-3, 300.0), x in log_uniform(1e-3, 400.0)) {
        for s in [ScalingMode::Scaled, ScalingMode::Unscaled] {
            let p = evaluate(a, x, s);
            let m = evaluate(-a, x, s);
            match (p, m) {
                (Ok(p), Ok(m)) => {
                    prop_assert_eq!(bits(&p.quad), bits(&m.quad));
                    prop_assert_eq!(p.choice, m.choice);
                }
                (Err(e), Err(f)) => prop_assert_eq!(e.to_string(), f.to_string()),
                _ => prop_assert!(false, "only one sign evaluated at a={} x={}", a, x),
            }
        }
    }

    #[test]
    fn scaled_unscaled_agree(a in log_uniform(1e-3, 300.0), x in log_uniform(1e-3, 400.0)) {
        let Ok(u) = evaluate(a, x, ScalingMode::Unscaled) else { return Ok(()) };
        let sc = evaluate(a, x, ScalingMode::Scaled).unwrap();
        let p = OrderArg::new(a, x).unwrap();
        let s = scale_factor_log(&p, Family::K);
        let want = [sc.quad.k * (-s).exp(), sc.quad.kp * (-s).exp(), sc.quad.l * s.exp(), sc.quad.lp * s.exp()];
        let got = [u.quad.k, u.quad.kp, u.quad.l, u.quad.lp];
        for (g, w) in got.into_iter().zip(want) {
            if w.is_normal() {
                prop_assert!(ulps(g, w) <= 2, "a={} x={} got {} want {}", a, x, g, w);
            }
        }
    }

    #[test]
    fn wronskian(a in log_uniform(1e-3, 200.0), x in log_uniform(1e-3, 200.0)) {
        let r = evaluate(a, x, ScalingMode::Scaled).unwrap();
        let w = r.quad.wronskian_residual(x).abs();
        prop_assert!(w <= 1e-11, "a={} x={} residual {:e} via {}", a, x, w, r.choice.tag());
        prop_assert!(r.est_accuracy <= 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100_000))]

    // No hole in the region map: the fallback chain is never exhausted.
    #[test]
    fn dispatch_total(a in log_uniform(1e-3, 1e3), x in log_uniform(1e-3, 2e3)) {
        let r = evaluate(a, x, ScalingMode::Scaled);
        prop_assert!(r.is_ok(), "a={} x={}: {:?}", a, x, r.err());
        prop_assert!(r.unwrap().quad.is_finite());
    }
}

#[test]
fn choice_inside_validity() {
    let cfg = DispatchConfig::default();
    let spec = GridSpec { points: 3000, seed: 7, ..GridSpec::default() };
    for (a, x) in spec.grid() {
        let p = OrderArg::new(a, x).unwrap();
        let r = evaluate(a, x, ScalingMode::Scaled).unwrap();
        let allowed = cfg.candidates(&p);
        for m in [r.choice.k, r.choice.kp, r.choice.l, r.choice.lp] {
            assert!(allowed.contains(&m), "{m:?} at a={a} x={x}");
        }
    }
}
