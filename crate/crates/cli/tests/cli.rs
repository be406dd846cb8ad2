use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn brooks(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brooks")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn k4_prints_clique_certificate() {
    let out = brooks(&["color", path_str(&fixture("k4.col"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).ends_with("s OBSTRUCTION clique\nw 1 2 3 4\n"));
}

#[test]
fn c6_with_two_colors() {
    let out = brooks(&["color", path_str(&fixture("c6.col")), "--colors", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("s COLORING 2\n"));
    assert!(text.contains("c colors_used 2\n"));
}

#[test]
fn generated_odd_cycle_uses_three_colors() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c5.col");
    let gen = brooks(&["gen", "--model", "cycle", "--n", "5", "--seed", "0", "--out", path_str(&file)]);
    assert_eq!(gen.status.code(), Some(0));
    let out = brooks(&["color", path_str(&file)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("c colors_used 3\n"));
}

#[test]
fn odd_cycle_at_budget_two_is_an_obstruction() {
    let out = brooks(&["color", path_str(&fixture("c5.col")), "--colors", "2", "--verify"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).ends_with("s OBSTRUCTION oddcycle\nw 1 2 3 4 5\n"));
}

#[test]
fn error_exits() {
    // Δ(K4) = 3 > 2
    let out = brooks(&["color", path_str(&fixture("k4.col")), "--colors", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds color budget"));

    assert_eq!(brooks(&["color", path_str(&fixture("selfloop.col"))]).status.code(), Some(1));
    assert_eq!(brooks(&["color", "/nonexistent/graph.col"]).status.code(), Some(1));
    assert_eq!(brooks(&["color"]).status.code(), Some(1));
    assert_eq!(brooks(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(brooks(&["gen", "--model", "gnp", "--n", "4", "--seed", "1"]).status.code(), Some(1));
    assert_eq!(brooks(&["--help"]).status.code(), Some(0));
}

#[test]
fn text_and_json_results_verify() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["k4.col", "c5.col", "c6.col", "petersen.col", "mixed6.col", "k4_edge.col"] {
        let graph = fixture(name);
        for format in ["text", "json"] {
            let out = brooks(&["color", path_str(&graph), "--output", format]);
            let result = dir.path().join(format!("{name}.{format}"));
            std::fs::write(&result, &out.stdout).unwrap();
            let check = brooks(&["verify", path_str(&graph), path_str(&result)]);
            assert_eq!(check.status.code(), Some(0), "{name} {format}: {}", stdout(&check));
        }
    }
}

#[test]
fn verify_rejects_tampered_results() {
    let dir = tempfile::tempdir().unwrap();
    let bad_coloring = dir.path().join("bad.txt");
    std::fs::write(&bad_coloring, "s COLORING 3\nv 1 1\nv 2 2\nv 3 3\nv 4 3\n").unwrap();
    let out = brooks(&["verify", path_str(&fixture("k4.col")), path_str(&bad_coloring)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("INVALID"));

    // 1-2-3 is a path in C6, not a cycle
    let not_a_cycle = dir.path().join("path.txt");
    std::fs::write(&not_a_cycle, "s OBSTRUCTION oddcycle\nw 1 2 3\n").unwrap();
    let c6 = brooks(&["verify", path_str(&fixture("c6.col")), path_str(&not_a_cycle)]);
    assert_eq!(c6.status.code(), Some(1));
}

#[test]
fn identical_runs_print_identical_bytes() {
    let petersen = fixture("petersen.col");
    let mixed = fixture("mixed6.col");
    for args in [
        vec!["color", path_str(&petersen)],
        vec!["color", path_str(&mixed), "--verify"],
        vec!["color", path_str(&petersen), "--colors", "4"],
        vec!["gen", "--model", "regular", "--d", "3", "--n", "40", "--seed", "9"],
        vec!["gen", "--model", "gnp", "--p", "0.3", "--n", "25", "--seed", "4"],
    ] {
        assert_eq!(brooks(&args).stdout, brooks(&args).stdout);
    }
}

#[test]
fn json_document_shape() {
    let out = brooks(&["color", path_str(&fixture("mixed6.col")), "--output", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["n"], 6);
    assert_eq!(doc["k"], 3);
    assert_eq!(doc["outcome"], "coloring");
    assert_eq!(doc["colors"].as_array().unwrap().len(), 6);
    assert!(doc["millis"].is_u64());
    assert_eq!(doc["component_count"], 2);
}

#[test]
fn bench_prints_one_row_per_size() {
    let out = brooks(&["bench", "--model", "regular", "--d", "3", "--sizes", "10,20,40", "--seed", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().nth(1).unwrap().contains("coloring"));
}
