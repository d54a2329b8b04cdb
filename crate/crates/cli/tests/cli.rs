//! End-to-end tests of the `fs` binary: output contracts, determinism, and
//! exit codes.

use std::process::{Command, Output};

fn fs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fs"))
        .args(args)
        .env_remove("FS_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn count_prints_the_bare_total() {
    let out = fs(&["count", "--j", "2", "--k", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "32\n");
}

#[test]
fn chromatic_prints_4_for_flower_snarks() {
    let out = fs(&["chromatic", "--j", "2", "--k", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4\n");
}

#[test]
fn chromatic_prints_classes_at_index_3() {
    let out = fs(&["chromatic", "--j", "2", "--k", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("3"));
    let classes: Vec<&str> = lines.collect();
    assert_eq!(classes.len(), 3);
    // the three classes partition the 24 edge serials
    let mut serials: Vec<usize> = classes
        .iter()
        .flat_map(|line| {
            line.split(": ")
                .nth(1)
                .unwrap()
                .split_whitespace()
                .map(|s| s.parse().unwrap())
        })
        .collect();
    serials.sort_unstable();
    assert_eq!(serials, (0..24).collect::<Vec<_>>());
}

#[test]
fn usage_errors_exit_2() {
    let out = fs(&["count", "--j", "5", "--k", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = fs(&["count", "--j", "1", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = fs(&["count", "--j", "1", "--k", "4", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_and_writes_csv() {
    let dir = std::env::temp_dir().join("fs-cli-test-csv");
    std::fs::create_dir_all(&dir).unwrap();
    let csv_path = dir.join("counts.csv");
    let out = fs(&[
        "verify",
        "--kmax",
        "4",
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("all "));
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.starts_with("j,k,quantity,enumerated,closed_form,pass\n"));
    assert!(csv.lines().skip(1).all(|l| l.ends_with(",true")));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn enumerate_is_deterministic_and_respects_limit() {
    let a = fs(&["enumerate", "--j", "2", "--k", "4"]);
    let b = fs(&["enumerate", "--j", "2", "--k", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 34); // mu(2,4) = 2*9 + 16

    let limited = fs(&["enumerate", "--j", "2", "--k", "4", "--limit", "5"]);
    assert_eq!(stdout(&limited).lines().count(), 5);

    let typed = fs(&["enumerate", "--j", "2", "--k", "4", "--type", "2.0"]);
    assert_eq!(stdout(&typed).lines().count(), 9);
}

#[test]
fn two_factor_reports_a_hamiltonian_complement() {
    let out = fs(&["two-factor", "--j", "1", "--k", "3", "--matching", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("type 1"));
    assert!(text.contains("lengths 12"));
    assert!(text.contains("hamiltonian true"));
}

#[test]
fn two_factor_reads_matching_files() {
    let dir = std::env::temp_dir().join("fs-cli-test-matching");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    // the all-X type-2.0 matching of FS(3,4)
    std::fs::write(&path, "[0, 3, 6, 9, 13, 14, 19, 20]").unwrap();
    let out = fs(&["two-factor", "--j", "3", "--k", "4", "--matching", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("type 2.0"));
    assert!(text.contains("six-cycles"));

    std::fs::write(&path, "[0, 1]").unwrap();
    let out = fs(&["two-factor", "--j", "3", "--k", "4", "--matching", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn transform_rejects_bad_anchors_with_exit_1() {
    let out = fs(&[
        "transform", "--j", "2", "--k", "5", "--variant", "1", "--anchor", "9", "--matching", "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn build_edge_list_shape() {
    let out = fs(&["build", "--j", "1", "--k", "2"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 12);
    assert_eq!(text.lines().next(), Some("t0 x0 #0"));

    let json = fs(&["build", "--j", "1", "--k", "2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["vertices"].as_array().unwrap().len(), 8);
    assert_eq!(value["edges"].as_array().unwrap().len(), 12);
}

#[test]
fn words_summary_matches_the_counts() {
    let out = fs(&["words", "--j", "2", "--k", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("words-per-subtype 9"));
    assert!(text.contains("hamiltonian-total 8"));

    let odd = fs(&["words", "--j", "2", "--k", "5"]);
    assert_eq!(odd.status.code(), Some(1));
}

#[test]
fn thread_cap_does_not_change_output() {
    let plain = fs(&["verify", "--kmax", "3"]);
    let capped = Command::new(env!("CARGO_BIN_EXE_fs"))
        .args(["verify", "--kmax", "3"])
        .env("FS_THREADS", "1")
        .output()
        .expect("binary runs");
    assert!(plain.status.success() && capped.status.success());
    assert_eq!(plain.stdout, capped.stdout);
}

#[test]
fn jaeger_listing_shape() {
    let out = fs(&["jaeger", "--j", "3", "--k", "3", "--enumerate", "--bf-check"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("jaeger true"));
    assert!(text.contains("matchings 6"));
    assert!(text.contains("double-cover true"));
    assert_eq!(text.lines().filter(|l| l.contains("| blue ")).count(), 6);
}
