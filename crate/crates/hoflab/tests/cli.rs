use std::process::{Command, Output};

fn hoflab(args: &[&str]) -> Output {
    let cache = tempfile::tempdir().unwrap();
    Command::new(env!("CARGO_BIN_EXE_hoflab"))
        .args(args)
        .env("HOFLAB_CACHE_DIR", cache.path())
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn values(out: &Output) -> Vec<u64> {
    stdout(out).lines().map(|l| l.parse().unwrap()).collect()
}

#[test]
fn gen_tables() {
    let g = hoflab(&["gen", "G", "--from", "0", "--to", "18"]);
    assert!(g.status.success());
    assert_eq!(
        values(&g),
        [0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9, 9, 10, 11, 11]
    );
    let w = hoflab(&["gen", "W", "--from", "0", "--to", "18"]);
    assert_eq!(
        values(&w),
        [0, 2, 1, 5, 7, 3, 10, 4, 13, 15, 6, 18, 20, 8, 23, 9, 26, 28, 11]
    );
    let h = hoflab(&["gen", "Hk", "--k", "2", "--from", "0", "--to", "25"]);
    assert_eq!(
        values(&h),
        [0, 0, 1, 1, 2, 2, 2, 3, 3, 4, 4, 4, 5, 5, 6, 6, 7, 7, 7, 8, 8, 9, 9, 9, 10, 10]
    );
}

#[test]
fn gen_csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.csv");
    let out = hoflab(&[
        "gen",
        "U",
        "--to",
        "3",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(path).unwrap(),
        "n,value\n1,2\n2,5\n3,7\n"
    );
}

#[test]
fn gen_usage_errors() {
    assert_eq!(hoflab(&["gen", "nonexistent"]).status.code(), Some(2));
    assert_eq!(hoflab(&["gen", "G", "--k", "2"]).status.code(), Some(2));
    assert_eq!(
        hoflab(&["gen", "G", "--from", "9", "--to", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_full_suite() {
    let out = hoflab(&["verify", "--to", "100000"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
    assert_eq!(text.lines().count(), 20);
}

#[test]
fn verify_selection_and_errors() {
    let out = hoflab(&["verify", "--check", "avg_theorem", "--to", "18"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS avg_theorem lo=0 hi=18 passed=19 failed=0"));
    assert_eq!(
        hoflab(&["verify", "--check", "nonexistent"]).status.code(),
        Some(2)
    );
    let out = hoflab(&["verify", "--to", "18", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let last = stdout(&out).lines().last().unwrap().to_string();
    assert!(last.starts_with("FAIL fault_injection"), "{last}");
    assert!(last.contains("n=9, expected=6, actual=7"), "{last}");
}

#[test]
fn verify_json() {
    let out = hoflab(&[
        "verify",
        "--check",
        "ks_split,fib_lemma",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let records: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let names: Vec<&str> = records
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["ks_split[golden]", "ks_split[pell]", "fib_lemma"]);
    assert!(records[0]["counterexample"].is_null());
}

#[test]
fn verify_empty_range() {
    let out = hoflab(&["verify", "--to", "0"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
}

#[test]
fn scatter_figure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.csv");
    assert!(
        hoflab(&["scatter", "--to", "68", "--out", path.to_str().unwrap()])
            .status
            .success()
    );
    let csv = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows[0], "n,W,lower_line,upper_line");
    assert_eq!(rows.len(), 69);
    assert_eq!(rows[4], "4,7,2,7");
    assert_eq!(
        stdout(&hoflab(&["scatter", "--to", "0"])),
        "n,W,lower_line,upper_line\n"
    );
}

#[test]
fn oeis_diff_examples() {
    for args in [
        ["G", "--limit", "19"],
        ["W", "--limit", "19"],
        ["V", "--limit", "1000"],
    ] {
        let mut full = vec!["oeis-diff", "--offline"];
        full.extend(args);
        let out = hoflab(&full);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
        assert!(stdout(&out).starts_with("PASS oeis_diff"));
    }
}

#[test]
fn oeis_diff_failures() {
    let out = hoflab(&["oeis-diff", "G", "--id", "A000000"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("fixture missing"));
    // shifting G against its own b-file breaks agreement
    let out = hoflab(&["oeis-diff", "G", "--shift", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = hoflab(&["oeis-diff", "G", "--shift", "5000"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hoflab(&["oeis-diff", "z"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hoflab(&["oeis-diff", "L", "--limit", "5000"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("truncated"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["gen", "f", "--to", "500", "--format", "csv"][..],
        &["scatter", "--to", "300"],
        &["oeis-diff", "b"],
    ] {
        assert_eq!(hoflab(args).stdout, hoflab(args).stdout);
    }
}
