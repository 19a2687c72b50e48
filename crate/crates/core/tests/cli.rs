use std::process::Command;

fn fejer(args: &[&str]) -> (i32, String, String) {
    fejer_env(args, &[])
}

fn fejer_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_fejer"));
    cmd.args(args).env_remove("FEJER_ABS_TOL");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<Option<f64>>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(|f| if f.is_empty() { None } else { Some(f.parse().unwrap()) }).collect())
        .collect();
    (header, rows)
}

fn eval_real(args: &[&str]) -> f64 {
    let (code, out, _) = fejer(&[&["--json", "eval"], args].concat());
    assert_eq!(code, 0, "{args:?}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    v["value"].as_f64().unwrap()
}

#[test]
fn thresholds_command() {
    let (code, out, _) = fejer(&["thresholds"]);
    assert_eq!(code, 0);
    let root = |name: &str| -> f64 {
        let line = out.lines().find(|l| l.starts_with(name)).unwrap();
        line.split_whitespace().nth(2).unwrap().parse().unwrap()
    };
    assert!((root("t0") - 0.709_566_763_5).abs() < 1e-8, "{out}");
    assert!((root("t1") - 0.468_563_318_7).abs() < 1e-8, "{out}");
}

#[test]
fn eval_and_exit_codes() {
    let (code, out, _) = fejer(&["eval", "si", "0"]);
    assert_eq!(code, 0);
    assert!(out.contains("abs_err"));
    assert_eq!(fejer(&["eval", "nosuch", "1"]).0, 2);
    assert_eq!(fejer(&["sweep", "nosuch"]).0, 2);
    let (code, _, err) = fejer(&["eval", "ci", "-1"]);
    assert_eq!(code, 3);
    assert!(err.contains("error"));
    assert_eq!(fejer(&["eval", "e", "1", "2"]).0, 2);
    assert_eq!(fejer(&["--abs-tol", "-1", "thresholds"]).0, 2);
    assert_eq!(fejer(&["eval", "list"]).0, 0);
}

#[test]
fn failed_sweep_exits_one() {
    // the even-n constant as printed sits just below S_2/(π − x) near x ≈ 1.339
    let (code, out, _) = fejer(&["sweep", "ak-even-upper", "--axis", "n=2", "--axis", "x=1.3,1.3386,1.34"]);
    assert_eq!(code, 1, "{out}");
}

#[test]
fn environment_tolerance_and_flag_precedence() {
    let (code, out, _) = fejer_env(&["--json", "eval", "m", "1"], &[("FEJER_ABS_TOL", "1e-6")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["abs_err"].as_f64().unwrap() <= 1e-6);
    assert_eq!(fejer_env(&["eval", "m", "1"], &[("FEJER_ABS_TOL", "abc")]).0, 2);
    assert_eq!(fejer_env(&["--abs-tol", "1e-10", "eval", "m", "1"], &[("FEJER_ABS_TOL", "abc")]).0, 0);
}

#[test]
fn sweep_json_report() {
    let (code, out, _) = fejer(&["--json", "sweep", "arccot-envelope", "--axis", "mu=1..3", "--axis", "x=0.01:3.13:50"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for key in ["bound", "grid", "samples", "violations", "min_margin", "argmin", "tolerances", "version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["samples"], 150);
    let (code, out, _) = fejer(&["--json", "sweep", "m-envelope", "--random", "50", "--seed", "9"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["samples"], 50);
}

#[test]
fn figure_files_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let f1 = dir.path().join("fig1.csv");
    let f2 = dir.path().join("fig2.csv");
    assert_eq!(fejer(&["figure", "fig1", "--n", "10", "--out", f1.to_str().unwrap()]).0, 0);
    assert_eq!(fejer(&["figure", "fig2", "--lambda", "12", "--out", f2.to_str().unwrap()]).0, 0);
    let t1 = std::fs::read_to_string(&f1).unwrap();
    let t2 = std::fs::read_to_string(&f2).unwrap();
    let (h1, _) = parse_csv(&t1);
    let (h2, rows2) = parse_csv(&t2);
    assert_eq!(
        h1,
        ["x", "S_n", "arccot_upper", "arccot_lower", "fejer1928", "turan1952", "ak2003", "bk1998", "koumandos2012", "alkou12"]
    );
    assert_eq!(h2, ["x", "lambda_Cci", "lambda_Sci_minus_1", "sec_x", "neg_sec_x"]);
    assert!(!t1.contains('\r') && t1.ends_with('\n'));
    assert_eq!(rows2.len(), 400);
    assert_eq!(fejer(&["figure", "fig1", "--n", "10"]).1, t1);
}

#[test]
fn figure_columns_rederivable_by_eval() {
    let (_, text, _) = fejer(&["figure", "fig1", "--n", "10", "--points", "7"]);
    let (_, rows) = parse_csv(&text);
    for row in &rows {
        let x = row[0].unwrap();
        let xs = format!("{:.17e}", x);
        assert_eq!(row[1].unwrap(), eval_real(&["sn", "10", &xs]));
        if let Some(v) = row[8] {
            assert_eq!(v, eval_real(&["koumandos2012", "10", &xs]));
        }
    }
    let (_, text, _) = fejer(&["figure", "fig2", "--lambda", "12", "--points", "5"]);
    let (_, rows) = parse_csv(&text);
    for row in &rows {
        let xs = format!("{:.17e}", row[0].unwrap());
        let (code, out, _) = fejer(&["--json", "eval", "cci", &xs, "12"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(row[1].unwrap(), 12.0 * v["value"].as_f64().unwrap());
    }
}
