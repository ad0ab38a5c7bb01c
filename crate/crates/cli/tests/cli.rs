use std::process::{Command, Output};

fn hyperzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperzeta"))
        .args(args)
        .env_remove("HYPERZETA_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_li_by_index_and_word_agree() {
    let a = hyperzeta(&["eval", "li", "--index", "2,1", "--z", "0.5"]);
    let b = hyperzeta(&["eval", "li", "--word", "xyy", "--z", "0.5"]);
    assert!(a.status.success() && b.status.success());
    let value = |o: &Output| -> f64 {
        let s = stdout(o);
        s.split('=').nth(1).unwrap().split_whitespace().next().unwrap().parse().unwrap()
    };
    assert!((value(&a) - value(&b)).abs() < 1e-14);
    // Li_{2,1}(1/2) = zeta(3)/8 - log^3(2)/6
    let l2 = std::f64::consts::LN_2;
    assert!((value(&a) - (1.2020569031595942 / 8.0 - l2.powi(3) / 6.0)).abs() < 1e-13);
}

#[test]
fn eval_zeta_json_record() {
    let o = hyperzeta(&["--format", "json-lines", "eval", "zeta", "--index", "3"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let value: f64 = v["value"].as_str().unwrap().parse().unwrap();
    assert!((value - 1.2020569031595942).abs() < 1e-13);
    assert!(v["error_bound"].is_string());
}

#[test]
fn eval_f_matches_closed_form() {
    // F(1, 1; 2; z) = -log(1 - z)/z
    let o = hyperzeta(&["eval", "f", "--alpha", "1", "--beta", "1", "--gamma", "2", "--z", "0.5"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let value: f64 = s.split('=').nth(1).unwrap().split_whitespace().next().unwrap().parse().unwrap();
    assert!((value - 2.0 * std::f64::consts::LN_2).abs() < 1e-12);
}

#[test]
fn transform_prints_formal_sum() {
    let o = hyperzeta(&["transform", "--which", "t0", "--mu", "1,3,2"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("t0(1,3,2) = "));
    let bad = hyperzeta(&["transform", "--which", "t7", "--mu", "1,3,2"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_single_identity_json_lines() {
    let o = hyperzeta(&["--format", "json-lines", "verify", "--identity", "euler-even", "--quick"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 6);
    for v in &lines {
        for key in ["identity", "params", "deviation", "budget", "pass", "wall_ms"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["identity"], "euler-even");
        assert_eq!(v["pass"], true);
        assert!(v["deviation"].as_f64().unwrap() <= v["budget"].as_f64().unwrap());
    }
}

#[test]
fn verify_all_quick_passes_sorted() {
    let o = hyperzeta(&["--format", "json-lines", "verify", "--all", "--quick", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    let names: Vec<String> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["identity"].as_str().unwrap().to_string())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert!(names.iter().any(|n| n == "main-thm2"));
}

#[test]
fn verify_reports_are_reproducible_with_seed() {
    let run = || {
        let o = hyperzeta(&["--format", "json-lines", "verify", "--identity", "shuffle-laws", "--quick", "--seed", "7"]);
        stdout(&o).lines().map(|l| {
            let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
            v["wall_ms"] = serde_json::Value::Null;
            v
        }).collect::<Vec<_>>()
    };
    assert_eq!(run(), run());
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(hyperzeta(&["verify", "--identity", "no-such-identity"]).status.code(), Some(2));
    assert_eq!(hyperzeta(&["eval", "li", "--index", "2,x", "--z", "0.5"]).status.code(), Some(2));
    assert_eq!(hyperzeta(&["eval", "zeta", "--index", "1"]).status.code(), Some(2));
    assert_eq!(hyperzeta(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(hyperzeta(&["verify", "--all", "--max-weight", "40"]).status.code(), Some(2));
}

#[test]
fn precision_below_limit_exits_3() {
    let o = hyperzeta(&["--precision", "1e-16", "eval", "zeta", "--index", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn precision_env_var_sets_default() {
    let o = Command::new(env!("CARGO_BIN_EXE_hyperzeta"))
        .args(["verify", "--identity", "euler-even"])
        .env("HYPERZETA_PRECISION", "1e-15")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_hyperzeta"))
        .args(["--format", "json-lines", "verify", "--identity", "euler-even"])
        .env("HYPERZETA_PRECISION", "1e-10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}
