use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_imbessel")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(line: &'a str, key: &str) -> &'a str {
    line.split('\t')
        .find_map(|kv| kv.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .unwrap_or_else(|| panic!("no {key} in {line}"))
}

#[test]
fn eval_order_zero() {
    let o = run(&["eval", "--a", "0", "--x", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let k = field(&out, "K");
    // 16 digits after the point, two-digit exponent
    assert_eq!(k.len(), "4.2102443824070834e-01".len(), "{k}");
    let k: f64 = k.parse().unwrap();
    assert!((k / 0.421_024_438_240_708_33 - 1.0).abs() < 1e-15, "{k}");
    let l: f64 = field(&out, "L").parse().unwrap();
    assert!((l / 1.266_065_877_752_008_3 - 1.0).abs() < 1e-15);
    assert_eq!(field(&out, "scaling"), "unscaled");
    assert_eq!(field(&out, "method").trim(), "mon");
}

#[test]
fn eval_scaled_large_order() {
    let o = run(&["eval", "--a", "500", "--x", "1", "--scaled"]);
    assert_eq!(o.status.code(), Some(0));
    let k: f64 = field(&stdout(&o), "K").parse().unwrap();
    assert!(k.is_finite());
}

#[test]
fn eval_even_in_order() {
    let p = stdout(&run(&["eval", "--a", "7", "--x", "3"]));
    let m = stdout(&run(&["eval", "--a", "-7", "--x", "3"]));
    for key in ["K", "Kp", "L", "Lp", "method"] {
        assert_eq!(field(&p, key), field(&m, key));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["eval", "--a", "1", "--x", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--a", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--a", "500", "--x", "1"]).status.code(), Some(3));
}

#[test]
fn table_rows() {
    let o = run(&[
        "table", "--a-min", "0", "--a-max", "10", "--a-steps", "3", "--x-min", "0.5", "--x-max", "20", "--x-steps", "4",
        "--scaled",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "a\tx\tK\tKp\tL\tLp\tscaling\tmethod");
    assert_eq!(lines.len(), 13);
    for l in &lines[1..] {
        let cols: Vec<&str> = l.split('\t').collect();
        assert_eq!(cols.len(), 8);
        let v: Vec<f64> = cols[..6].iter().map(|c| c.parse().unwrap()).collect();
        let w = v[1] * (v[2] * v[5] - v[3] * v[4]) - 1.0;
        assert!(w.abs() < 1e-11, "{l}");
        assert_eq!(cols[6], "scaled");
    }
}

#[test]
fn table_reports_range_error() {
    let o = run(&[
        "table", "--a-min", "400", "--a-max", "500", "--a-steps", "2", "--x-min", "1", "--x-max", "1", "--x-steps", "1",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn selfcheck_small() {
    let o = run(&["selfcheck", "--points", "200", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("all\t200\t")));
    assert!(out.lines().any(|l| l.starts_with("seam\tsimplified/full")));
    assert_eq!(out.lines().last(), Some("PASS"));
}

#[test]
fn selfcheck_fails_on_impossible_tolerance() {
    let o = run(&["selfcheck", "--points", "50", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).lines().last(), Some("FAIL"));
}

#[test]
fn selfcheck_empty_grid() {
    let o = run(&["selfcheck", "--points", "0"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn region_map_intercepts() {
    let o = run(&["region-map", "--limit", "300"]);
    assert_eq!(o.status.code(), Some(0));
    let pts: Vec<(f64, f64)> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| {
            let (a, x) = l.split_once('\t').unwrap();
            (a.parse().unwrap(), x.parse().unwrap())
        })
        .collect();
    let a_axis = pts.iter().map(|p| p.0).fold(0.0, f64::max);
    let x_axis = pts.iter().map(|p| p.1).fold(0.0, f64::max);
    assert!((a_axis - 439.7).abs() < 0.1, "{a_axis}");
    assert!((x_axis - 690.8).abs() < 0.1, "{x_axis}");
    assert!(pts.iter().any(|p| p.0 == 0.0));
}
