//! End-to-end tests of the `co-cycles` binary: exit codes, golden
//! output, determinism, and the gen -> check pipeline.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_co-cycles"))
}

fn write_temp(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("co-cycles-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const TRIANGLE: &str = "p edge 3 3\ne 1 2\ne 2 3\ne 3 1\n";
const K4: &str = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
const TWO_TRIANGLES: &str = "p edge 4 5\ne 1 2\ne 1 3\ne 2 3\ne 1 4\ne 2 4\n";
const K23: &str = "p edge 5 6\ne 1 3\ne 3 2\ne 1 4\ne 4 2\ne 1 5\ne 5 2\n";
const TREE: &str = "p edge 4 3\ne 1 2\ne 2 3\ne 2 4\n";
const PENTAGON: &str =
    "p edge 7 9\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\ne 1 6\ne 6 2\ne 3 7\ne 7 4\n";

#[test]
fn check_triangle_is_co() {
    let path = write_temp("triangle.col", TRIANGLE);
    let out = bin().args(["check"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "CO\n");
}

#[test]
fn check_k4_reports_edge_bound() {
    let path = write_temp("k4.col", K4);
    let out = bin().args(["check"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "NOT_CO EdgeBoundGlobal\n");
}

#[test]
fn check_malformed_input_exits_2() {
    let path = write_temp("bad.col", "e 1 1\n");
    let out = bin().args(["check"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn check_missing_file_exits_2() {
    let out = bin().args(["check", "/nonexistent/xyz.col"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enum_two_triangles_golden() {
    let path = write_temp("twotri.col", TWO_TRIANGLES);
    let out = bin().args(["enum"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "CO\n1 2 3\n1 2 4\n");
}

#[test]
fn enum_tree_prints_no_cycles() {
    let path = write_temp("tree.col", TREE);
    let out = bin().args(["enum"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "CO\n");
}

#[test]
fn enum_k23_reports_irreducible() {
    let path = write_temp("k23.col", K23);
    let out = bin().args(["enum"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "NOT_CO IrreducibleResidue\n");
}

#[test]
fn enum_output_is_deterministic() {
    let path = write_temp("pentagon.col", PENTAGON);
    let first = bin().args(["enum"]).arg(&path).output().unwrap();
    for _ in 0..3 {
        let again = bin().args(["enum"]).arg(&path).output().unwrap();
        assert_eq!(first.stdout, again.stdout);
    }
    assert_eq!(stdout(&first), "CO\n1 2 3 4 5\n1 2 6\n3 4 7\n");
}

#[test]
fn enum_threads_do_not_change_output() {
    let path = write_temp("pentagon-threads.col", PENTAGON);
    let seq = bin().args(["enum"]).arg(&path).output().unwrap();
    let par = bin().args(["enum", "--threads", "4"]).arg(&path).output().unwrap();
    assert_eq!(seq.stdout, par.stdout);
}

#[test]
fn enum_json_fields() {
    let path = write_temp("twotri.json.col", TWO_TRIANGLES);
    let out = bin().args(["enum", "--json"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["co"], true);
    assert_eq!(v["n"], 4);
    assert_eq!(v["m"], 5);
    assert_eq!(v["components"], 1);
    assert_eq!(v["cycles"], serde_json::json!([[1, 2, 3], [1, 2, 4]]));
    assert!(v["duration_ms"].is_number());
}

#[test]
fn enum_json_not_co_carries_reason() {
    let path = write_temp("k23.json.col", K23);
    let out = bin().args(["enum", "--json"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["co"], false);
    assert_eq!(v["reason"], "IrreducibleResidue");
    assert_eq!(v["cycles"], serde_json::json!([]));
}

#[test]
fn gen_triangle_with_defaults() {
    let out = bin()
        .args(["gen", "--attachments", "0", "--min-len", "3", "--max-len", "3", "--seed", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("p edge 3 3"));
    assert!(text.contains("rng=chacha8"));
}

#[test]
fn gen_is_deterministic_per_seed() {
    let run = |seed: &str| {
        stdout(
            &bin()
                .args(["gen", "--attachments", "5", "--max-len", "6", "--seed", seed])
                .output()
                .unwrap(),
        )
    };
    assert_eq!(run("7"), run("7"));
    assert_ne!(run("7"), run("8"));
}

#[test]
fn gen_output_round_trips_through_check() {
    let dir = std::env::temp_dir().join(format!("co-cycles-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gen99.col");
    let out = bin()
        .args(["gen", "--attachments", "99", "--max-len", "5", "--seed", "7", "-o"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let check = bin().args(["check"]).arg(&path).output().unwrap();
    assert_eq!(check.status.code(), Some(0));
    // count identity: 99 attachments means 100 cycles
    let enumerated = bin().args(["enum"]).arg(&path).output().unwrap();
    assert_eq!(stdout(&enumerated).lines().count(), 101); // verdict + 100 cycles
}

#[test]
fn gen_non_co_is_rejected_by_check() {
    let out = bin()
        .args(["gen", "--non-co", "--attachments", "2", "--max-len", "5", "--seed", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let path = write_temp("nonco.col", &stdout(&out));
    let check = bin().args(["check"]).arg(&path).output().unwrap();
    assert_eq!(check.status.code(), Some(1));
}

#[test]
fn gen_rejects_invalid_params() {
    let out = bin()
        .args(["gen", "--min-len", "2", "--seed", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_agrees_on_worked_examples() {
    for (name, content, co_line) in [
        ("o-tri.col", TRIANGLE, "decompose_is_co: true"),
        ("o-k23.col", K23, "decompose_is_co: false"),
        ("o-pent.col", PENTAGON, "decompose_is_co: true"),
    ] {
        let path = write_temp(name, content);
        let out = bin().args(["oracle"]).arg(&path).output().unwrap();
        let text = stdout(&out);
        assert_eq!(out.status.code(), Some(0), "oracle failed on {name}: {text}");
        assert!(text.contains(co_line));
        assert!(text.trim_end().ends_with("reducer: agree"));
    }
}

#[test]
fn oracle_k23_brute_matches() {
    let path = write_temp("o-k23b.col", K23);
    let out = bin().args(["oracle"]).arg(&path).output().unwrap();
    let text = stdout(&out);
    assert!(text.contains("brute_is_co: false"));
}

#[test]
fn oracle_rejects_oversized_input() {
    let mut big = String::new();
    for i in 1..=30 {
        big.push_str(&format!("e {} {}\n", i, i % 30 + 1));
    }
    let path = write_temp("o-big.col", &big);
    let out = bin().args(["oracle"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("oracle out of range"));
}

#[test]
fn bench_emits_csv_rows() {
    let out = bin()
        .args(["bench", "--sizes", "50,100,200", "--seed", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,m,cycles,duration_ms"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3);
    for (row, expect_n) in rows.iter().zip([50usize, 100, 200]) {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols[0].parse::<usize>().unwrap(), expect_n);
        let m: usize = cols[1].parse().unwrap();
        let cycles: usize = cols[2].parse().unwrap();
        assert_eq!(cycles, m - expect_n + 1);
    }
    assert!(String::from_utf8_lossy(&out.stderr).contains("log-log slope"));
}

#[test]
fn bench_rejects_unsorted_sizes() {
    let out = bin()
        .args(["bench", "--sizes", "100,50"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
