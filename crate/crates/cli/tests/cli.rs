use std::process::{Command, Output};

fn sqscope(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqscope"))
        .args(args)
        .env_remove("SQSCOPE_BUDGET_MS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn seq_digits() {
    let out = sqscope(&["seq", "abaababaabaababaa", "--format", "digits"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "22000011100110010");

    let out = sqscope(&["seq", "ab", "--format", "digits"]);
    assert_eq!(stdout(&out).trim(), "00");
}

#[test]
fn seq_from_spec_matches_literal_word() {
    let literal = sqscope(&["seq", "abaababaabaababaa", "--format", "digits"]);
    let spec = sqscope(&["seq", "spec", "wm:m=2", "--format", "digits"]);
    assert_eq!(stdout(&literal), stdout(&spec));
}

#[test]
fn seq_json_fields() {
    let out = sqscope(&["seq", "abaababaabaababaa", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["length"], 17);
    assert_eq!(v["sequence"], "22000011100110010");
    assert_eq!(
        v["count"],
        v["sequence"]
            .as_str()
            .unwrap()
            .bytes()
            .map(|b| (b - b'0') as u64)
            .sum::<u64>()
    );
    assert_eq!(v["fsPositions"].as_array().unwrap().len(), 2);
    assert_eq!(v["fsPositions"][0]["position"], 1);
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(sqscope(&["seq", "abc1"]).status.code(), Some(2));
    assert_eq!(sqscope(&["build", "wm:m=0"]).status.code(), Some(2));
    assert_eq!(sqscope(&["factorize", "ab", "ba"]).status.code(), Some(2));
}

#[test]
fn published_table_matches_golden() {
    let out = sqscope(&["table", "--preset", "published"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), include_str!("golden/table_published.csv"));
}

#[test]
fn table_picks_best_i() {
    let out = sqscope(&["table", "--j", "3"]);
    assert_eq!(stdout(&out), "i,j,squares,length,density\n1,3,31,48,.646\n");
}

#[test]
fn verify_wm_summary() {
    let out = sqscope(&["verify", "wm", "--m-max", "20"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().any(|l| l == "wm: PASS (20 checks)"));
}

#[test]
fn verify_catalog_reports_notes() {
    let out = sqscope(&["verify", "catalog"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("catalog: PASS (18 checks, 2 discrepancy notes)"));
}

#[test]
fn verify_impossibility() {
    let out = sqscope(&["verify", "impossibility"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("impossibility: PASS"));
}

#[test]
fn search_json_and_budget() {
    let out = sqscope(&["search", "--m", "1", "--len-u", "6", "--len-big-u", "8"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["found"], false);
    assert_eq!(v["query"]["len_U"], 8);
    assert_eq!(v["query"]["len_u"], 6);

    let out = sqscope(&["search", "--m", "1", "--len-u", "5", "--len-big-u", "8"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["found"], true);
    assert!(v["witness"].is_string());

    let out = sqscope(&[
        "search",
        "--m",
        "3",
        "--len-u",
        "6",
        "--len-big-u",
        "8",
        "--budget-ms",
        "0",
    ]);
    assert!(matches!(out.status.code(), Some(0) | Some(4)));
}

#[test]
fn factorize_example() {
    let out = sqscope(&["factorize", "baaba", "baababaa"]);
    assert_eq!(stdout(&out).trim(), "(baa, ba, 1, 1)");
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify",
        "equivalence",
        "--count",
        "300",
        "--format",
        "json",
    ];
    let strip = |s: String| -> String {
        s.split(',')
            .filter(|f| !f.contains("wallTimeMs"))
            .collect::<Vec<_>>()
            .join(",")
    };
    let a = strip(stdout(&sqscope(&args)));
    let b = strip(stdout(&sqscope(&args)));
    assert_eq!(a, b);
}
