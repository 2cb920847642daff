//! End-to-end tests of the `coxshell` binary: exit codes, output format,
//! JSON schema and DOT determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_coxshell"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn hpoly_of_the_a3_interval() {
    let out = bin()
        .args(["hpoly", "--type", "A3", "--u", "1 2", "--v", "longest"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("f = 1+8q+15q^2+8q^3"), "{text}");
    assert!(text.contains("h = 1+5q+2q^2"), "{text}");
}

#[test]
fn linshell_refutes_the_unlabelable_complex() {
    let out = bin()
        .arg("linshell")
        .arg(data("not-linearly-shellable.facets"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("no labeling found (40320 searched)"));
}

#[test]
fn shell_check_accepts_hachimori_lex() {
    let out = bin()
        .arg("shell-check")
        .arg(data("hachimori.facets"))
        .args(["--order", "lex"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn shell_check_rejects_a_bad_file_order() {
    let path = tmp("disconnected.facets");
    std::fs::write(&path, "1 2\n4 5\n2 3\n").unwrap();
    let out = bin()
        .arg("shell-check")
        .arg(&path)
        .args(["--order", "file", "--json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["ok"], false);
    assert!(report["violation"].is_object());
}

#[test]
fn strong_check_accepts_uniform_matroid_revlex() {
    let path = tmp("u24.facets");
    std::fs::write(&path, "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").unwrap();
    let out = bin()
        .arg("strong-check")
        .arg(&path)
        .args(["--order", "revlex"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn dot_output_is_deterministic() {
    let run = || {
        let out = bin()
            .args([
                "hasse", "--type", "A3", "--u", "1 2", "--v", "longest", "--poset", "preceq",
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    let first = run();
    assert_eq!(first, run());
    let text = String::from_utf8(first).unwrap();
    assert!(text.starts_with("graph {"));
    assert!(text.contains("\"2314\" -- \"2341\";"));
    // 11 cover edges of the refined order on the reference interval.
    assert_eq!(text.matches(" -- ").count(), 11);
}

#[test]
fn dot_flag_writes_a_file() {
    let path = tmp("weak.dot");
    let out = bin()
        .args(["hasse", "--type", "A3", "--u", "1 2", "--v", "longest"])
        .arg("--dot")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.matches(" -- ").count(), 9);
}

#[test]
fn interval_json_uses_zero_based_words() {
    let out = bin()
        .args([
            "interval", "--type", "A3", "--u", "1 2", "--v", "longest", "--json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["size"], 8);
    assert_eq!(report["u"], serde_json::json!([0, 1]));
    assert_eq!(report["descent_set"], serde_json::json!([0, 1]));
}

#[test]
fn matrix_file_with_infinite_bond() {
    let path = tmp("infinite.json");
    std::fs::write(&path, r#"{"matrix": [[1, 0], [0, 1]]}"#).unwrap();
    let out = bin()
        .arg("interval")
        .arg("--system")
        .arg(&path)
        .args(["--u", "e", "--v", "1 2 1 2", "--json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["size"], 5);
}

#[test]
fn generator_names_accepted_in_words() {
    let out = bin()
        .args([
            "validate", "--type", "B4", "--u", "s2 s3 s2", "--v", "s2 s3 s2 s1 s0 s2 s3",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn input_errors_exit_2() {
    // Unknown shorthand.
    let out = bin()
        .args(["hpoly", "--type", "Z9", "--u", "e", "--v", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // Missing facet file.
    let out = bin().arg("shell-check").arg(tmp("missing.facets")).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // Generator position out of range.
    let out = bin()
        .args(["hpoly", "--type", "A2", "--u", "e", "--v", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // `longest` needs a shorthand system.
    let path = tmp("a2.json");
    std::fs::write(&path, r#"{"matrix": [[1, 3], [3, 1]]}"#).unwrap();
    let out = bin()
        .arg("hpoly")
        .arg("--system")
        .arg(&path)
        .args(["--u", "e", "--v", "longest"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // Malformed facet line.
    let bad = tmp("bad.facets");
    std::fs::write(&bad, "3 2 1\n").unwrap();
    let out = bin().arg("shell-check").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validate_random_samples_pass() {
    let out = bin()
        .args(["validate", "--random", "8", "--seed", "5", "--json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["ok"], true);
}

#[test]
fn linshell_finds_a_witness_for_the_hostile_labeling() {
    // Hachimori's complex with the vertex names scrambled by the inverse of
    // 6457312: a labeling fixing lex must still exist.
    let hachimori_text = std::fs::read_to_string(data("hachimori.facets")).unwrap();
    let sigma_inv = [6u32, 7, 5, 2, 3, 1, 4];
    let mut lines = Vec::new();
    for line in hachimori_text.lines() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut verts: Vec<u32> = line
            .split_whitespace()
            .map(|t| sigma_inv[t.parse::<usize>().unwrap() - 1])
            .collect();
        verts.sort_unstable();
        lines.push(
            verts
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
    }
    let path = tmp("hostile.facets");
    std::fs::write(&path, lines.join("\n")).unwrap();
    let out = bin().arg("linshell").arg(&path).arg("--json").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!(report["labeling"].is_array());
}
