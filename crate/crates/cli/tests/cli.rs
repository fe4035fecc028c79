use std::process::{Command, Output};

use serde_json::Value;

fn latwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latwalk"))
        .args(args)
        .env_remove("LATWALK_ORACLE_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = latwalk(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&all)).unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn chung_feller_polynomial_as_json() {
    let v = json(&[
        "poly",
        "--steps",
        "1,0;0,1",
        "--endpoint",
        "2,2",
        "--stat",
        "a1",
    ]);
    assert_eq!(v["command"], "poly");
    assert_eq!(v["result"]["kind"], "polynomial");
    assert_eq!(
        strings(&v["result"]["coefficients"]),
        ["2", "0", "2", "0", "2"]
    );
}

#[test]
fn arcsine_as_csv() {
    assert_eq!(
        stdout(&["arcsine", "--n", "2", "--format", "csv"]),
        "6,4,6\n"
    );
}

#[test]
fn king_series_order_zero() {
    let v = json(&["gf", "king", "--order", "0"]);
    assert_eq!(v["result"]["coefficients"][0][0], "1");
}

#[test]
fn king_series_matches_enumeration() {
    let v = json(&["gf", "king", "--order", "4"]);
    for n in 0..=4 {
        let end = format!("{n},{n}");
        let brute = json(&[
            "poly",
            "--steps",
            "1,0;0,1;1,1",
            "--endpoint",
            &end,
            "--oracle",
        ]);
        assert_eq!(
            v["result"]["coefficients"][n],
            brute["result"]["coefficients"]
        );
    }
}

#[test]
fn dp_and_oracle_agree() {
    for steps in ["1,0;0,1", "2,0;0,1;1,1", "0,2;1,0;1,2"] {
        for stat in ["a1", "a2"] {
            for end in ["3,3", "4,2", "5,5"] {
                let args = ["poly", "--steps", steps, "--endpoint", end, "--stat", stat];
                let dp = json(&args);
                let mut with_oracle = args.to_vec();
                with_oracle.push("--oracle");
                let brute = json(&with_oracle);
                assert_eq!(dp["result"], brute["result"], "{steps} {stat} {end}");
                assert_eq!(brute["inputs"]["method"], "oracle");
            }
        }
    }
}

#[test]
fn generating_function_coefficients() {
    let cf = json(&["gf", "chung-feller", "--n", "3"]);
    assert_eq!(
        strings(&cf["result"]["coefficients"]),
        ["5", "0", "5", "0", "5", "0", "5"]
    );
    let a2 = json(&["gf", "a2", "--n", "2"]);
    assert_eq!(strings(&a2["result"]["coefficients"]), ["0", "2", "4"]);
}

#[test]
fn moments_are_exact() {
    let v = json(&[
        "moments",
        "--steps",
        "1,0;0,1",
        "--endpoint",
        "2,2",
        "--max-moment",
        "4",
    ]);
    let m = &v["result"];
    assert_eq!(m["kind"], "moments");
    assert_eq!(m["mass"], "6");
    assert_eq!(m["mean"], "2");
    assert_eq!(m["variance"], "8/3");
    assert_eq!(m["std_moments"][0]["exact"], "sqrt(0)");
    assert_eq!(m["std_moments"][1]["exact"], "3/2");
}

#[test]
fn three_dimensional_regions() {
    let v = json(&[
        "poly3",
        "--steps",
        "1,0,0;0,1,0;0,0,1",
        "--endpoint",
        "1,1,1",
        "--region",
        "1",
    ]);
    assert_eq!(strings(&v["result"]["coefficients"]), ["6"]);
    let dp = json(&[
        "poly3",
        "--steps",
        "1,0,0;0,1,0;0,0,1",
        "--endpoint",
        "2,2,1",
        "--region",
        "3",
    ]);
    let brute = json(&[
        "poly3",
        "--steps",
        "1,0,0;0,1,0;0,0,1",
        "--endpoint",
        "2,2,1",
        "--region",
        "3",
        "--oracle",
    ]);
    assert_eq!(dp["result"], brute["result"]);
}

#[test]
fn grand_polynomial_over_short_walks() {
    let v = json(&["oracle", "grand", "--steps", "1,0;0,1", "--length", "2"]);
    assert_eq!(v["result"]["total"], "4");
    assert_eq!(v["result"]["terms"].as_array().unwrap().len(), 4);
    let csv = stdout(&[
        "oracle", "grand", "--steps", "1,0;0,1", "--length", "2", "--format", "csv",
    ]);
    assert_eq!(
        csv,
        "a1,a2,a3,a4,count\n0,0,0,0,1\n0,1,2,0,1\n2,0,0,0,1\n2,1,2,0,1\n"
    );
}

#[test]
fn book_outputs() {
    let args = [
        "book",
        "--steps",
        "1,0;0,1",
        "--max-moment",
        "4",
        "--range",
        "20:25",
        "--range2",
        "30:35",
    ];
    let v = json(&args);
    let theorem = &v["result"]["theorems"][0];
    assert_eq!(theorem["steps"], "{01, 10}");
    assert_eq!(theorem["constants"][0]["display"], "1.0000000000");
    assert_eq!(v["result"]["excluded"].as_array().unwrap().len(), 2);

    let mut latex = args.to_vec();
    latex.extend(["--format", "latex"]);
    let table = stdout(&latex);
    assert!(table.starts_with("\\begin{tabular}"));
    assert!(table.contains("$\\{01, 10\\}$ & $1.0000000000n$"));

    let text = stdout(&args);
    assert!(text.contains("Theorem 1. Steps {01, 10}."));
}

#[test]
fn outputs_are_deterministic() {
    let runs = [
        vec![
            "book",
            "--steps",
            "1,0;0,1;1,1",
            "--max-moment",
            "5",
            "--range",
            "10:14",
            "--range2",
            "20:24",
            "--format",
            "json",
        ],
        vec![
            "oracle",
            "grand",
            "--steps",
            "1,0;0,1;1,1",
            "--length",
            "5",
            "--format",
            "json",
        ],
        vec![
            "moments",
            "--steps",
            "2,0;0,1",
            "--endpoint",
            "4,6",
            "--max-moment",
            "6",
            "--format",
            "text",
        ],
    ];
    for args in runs {
        assert_eq!(latwalk(&args).stdout, latwalk(&args).stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["poly", "--steps", "1,0;0,0", "--endpoint", "1,1"],
        vec!["poly", "--steps", "1,0;0,1", "--endpoint", "1"],
        vec![
            "poly3",
            "--steps",
            "1,0,0",
            "--endpoint",
            "1,0,0",
            "--region",
            "8",
        ],
        vec!["moments", "--steps", "2,0;0,2", "--endpoint", "1,1"],
        vec![
            "book",
            "--steps",
            "1,0;0,1",
            "--max-moment",
            "1",
            "--range",
            "5:9",
        ],
        vec!["frobnicate"],
    ] {
        let out = latwalk(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn oracle_guard_exits_three() {
    let out = Command::new(env!("CARGO_BIN_EXE_latwalk"))
        .args(["oracle", "grand", "--steps", "1,0;0,1", "--length", "12"])
        .env("LATWALK_ORACLE_LIMIT", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("LATWALK_ORACLE_LIMIT"));
}

#[test]
fn timing_is_opt_in() {
    let plain = json(&["arcsine", "--n", "3"]);
    assert!(plain.get("timing_ms").is_none());
    let timed = json(&["arcsine", "--n", "3", "--timing"]);
    assert!(timed["timing_ms"].is_u64());
}
