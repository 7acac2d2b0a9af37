use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catalan-hankel"))
        .args(args)
        .env_remove("HANKEL_PATH_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn seq_plain() {
    let o = run(&["seq", "--family", "catalan-conv", "--k", "2", "--n-max", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(1, 2, 5, 14, 42, 132)");
}

#[test]
fn hankel_backward_shift_csv() {
    let o = run(&[
        "hankel",
        "--family",
        "catalan-conv",
        "--k",
        "4",
        "--shift",
        "-2",
        "--size-max",
        "5",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,value\n0,1\n1,0\n2,0\n3,-1\n4,-1\n5,2\n");
}

#[test]
fn hankel_polynomial_json() {
    let o = run(&[
        "hankel",
        "--family",
        "narayana-conv",
        "--k",
        "3",
        "--size-max",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[2]["n"], 2);
}

#[test]
fn paths_listing_and_cap() {
    let o = run(&["paths", "--j", "4", "--k", "0", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(1,2,1,0):t\n(1,0,1,0):1\n1 + t\n");
    let capped = Command::new(env!("CARGO_BIN_EXE_catalan-hankel"))
        .args(["paths", "--j", "4", "--k", "0"])
        .env("HANKEL_PATH_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        run(&["seq", "--family", "catalan-conv", "--k", "0", "--n-max", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["hankel", "--family", "nope", "--size-max", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_small_bounds_passes_and_is_deterministic() {
    let args = [
        "verify", "--suite", "all", "--k-max", "2", "--m-max", "2", "--n-max", "4",
    ];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    let out = stdout(&a);
    assert!(!out.is_empty());
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "pass", "{line}");
        for key in ["check", "params", "lhs", "rhs"] {
            assert!(v.get(key).is_some(), "{key} missing in {line}");
        }
    }
    assert_eq!(stdout(&run(&args)), out);
}

#[test]
fn verify_lemma_random_reports() {
    let o = run(&["verify", "--suite", "lemma", "--random", "50", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let random: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .filter(|v| v["check"] == "lemma.random")
        .collect();
    assert_eq!(random.len(), 50);
    assert!(random.iter().all(|v| v["status"] == "pass"));
    assert_eq!(run(&["verify", "--suite", "bogus"]).status.code(), Some(2));
}
