use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

const GAMMA1: &str = "vertex z\nvertex a\nvertex x\nedge z a 2\nedge z x 4\nedge a x 2\n";
const PATH: &str = "vertex a\nvertex b\nvertex c\nedge a b 4\nedge b c 6\n";

fn graph_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn artin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin"))
        .args(args)
        .env_remove("ARTIN_MAX_DEGREE")
        .output()
        .unwrap()
}

fn run(graph: &str, args: &[&str]) -> (i32, String, String) {
    let f = graph_file(graph);
    let path = f.path().to_str().unwrap().to_string();
    let mut full: Vec<&str> = Vec::new();
    let mut inserted = false;
    for a in args {
        full.push(a);
        // the graph path follows the subcommand name
        if !inserted && !a.starts_with("--") && *a != "json" {
            full.push(&path);
            inserted = true;
        }
    }
    let out = artin(&full);
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn eq_defining_relation() {
    let (code, out, _) = run(GAMMA1, &["eq", "z x z x", "x z x z"]);
    assert_eq!((code, out.as_str()), (0, "equal\n"));
}

#[test]
fn eq_distinct() {
    let (code, out, _) = run(GAMMA1, &["eq", "z x", "x z"]);
    assert_eq!((code, out.as_str()), (1, "distinct\n"));
}

#[test]
fn check_reports_odd_label() {
    let (code, out, _) = run("vertex a\nvertex b\nedge a b 3\n", &["check"]);
    assert_eq!(code, 3);
    assert!(out.contains("odd label"), "{out}");
}

#[test]
fn check_reports_non_fc_triangle() {
    let tri = "vertex a\nvertex b\nvertex c\nedge a b 4\nedge b c 4\nedge a c 2\n";
    let (code, out, _) = run(tri, &["check"]);
    assert_eq!(code, 3);
    assert!(out.contains("triangle a b c"), "{out}");
    let (code, _, err) = run(tri, &["nf", "a"]);
    assert_eq!(code, 3);
    assert!(err.contains("triangle a b c"), "{err}");
}

#[test]
fn check_accepts_json_graph() {
    let json =
        r#"{"vertices": ["z", "a", "x"], "edges": [["z", "a", 2], ["z", "x", 4], ["a", "x", 2]]}"#;
    let (code, out, _) = run(json, &["check"]);
    assert_eq!((code, out.as_str()), (0, "even: yes\nfc: yes\n"));
}

#[test]
fn parse_errors_carry_positions() {
    let (code, _, err) = run("vertex a\nedge a\n", &["check"]);
    assert_eq!(code, 2);
    assert!(err.contains(":2:1:"), "{err}");
    let (code, _, err) = run(GAMMA1, &["nf", "z q^2"]);
    assert_eq!(code, 2);
    assert!(err.contains("1:3: unknown generator `q`"), "{err}");
    let (code, _, _) = run("vertex a\nvertex a\n", &["check"]);
    assert_eq!(code, 2);
}

#[test]
fn wrong_arity_is_a_usage_error() {
    let (code, _, _) = run(GAMMA1, &["eq", "z"]);
    assert_eq!(code, 2);
}

#[test]
fn act_matches_worked_example() {
    let (code, out, _) = run(GAMMA1, &["act", "z x z x", "--at", "z"]);
    assert_eq!((code, out.as_str()), (0, "(x^2 ; b[x|1]^1 b[1|1]^1)\n"));
    let (_, again, _) = run(GAMMA1, &["act", "x z x z", "--at", "z"]);
    assert_eq!(out, again);
}

#[test]
fn nf_is_deterministic_and_invariant() {
    let (_, a, _) = run(GAMMA1, &["nf", "z x z x a"]);
    let (_, b, _) = run(GAMMA1, &["nf", "a x z x z"]);
    let (_, c, _) = run(GAMMA1, &["nf", "z x z x a"]);
    assert_eq!(a, b);
    assert_eq!(a, c);
    let (code, id, _) = run(GAMMA1, &["nf", "z x z^-1 x^-1 z^-1 x^-1 z x"]);
    assert_eq!((code, id.as_str()), (0, "(((() ; 1) ; 1) ; 1)\n"));
}

#[test]
fn tower_stages() {
    let (code, out, _) = run("vertex a\nvertex b\n", &["tower"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "stage 1: a rank countably-infinite\nstage 2: b rank 1\n"
    );
    let (_, out, _) = run("vertex a\nvertex b\nedge a b 2\n", &["tower"]);
    assert_eq!(out, "stage 1: a rank 1\nstage 2: b rank 1\n");
}

#[test]
fn split_path_and_complete() {
    let (code, out, _) = run(PATH, &["split"]);
    assert_eq!(code, 0);
    assert_eq!(out, "split over a c\nX: b c\nY: a b\nZ: b\n");
    let (_, out, _) = run(GAMMA1, &["split"]);
    assert_eq!(out, "complete\n");
}

#[test]
fn separate_outcomes() {
    let (code, out, _) = run(PATH, &["separate", "a b^-1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("target: Z/"), "{out}");
    let (code, out, _) = run(PATH, &["separate", "a b a^-1 b^-1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("target: S"), "{out}");
    assert!(out.contains("gen a -> "), "{out}");
    let (code, out, _) = run(PATH, &["separate", "a b a^-1 b^-1", "--max-degree", "2"]);
    assert_eq!((code, out.as_str()), (1, "not-found\n"));
    let (code, out, _) = run(PATH, &["separate", "a a^-1"]);
    assert_eq!((code, out.as_str()), (1, "trivial\n"));
}

#[test]
fn separate_respects_degree_cap() {
    let f = graph_file(PATH);
    let out = Command::new(env!("CARGO_BIN_EXE_artin"))
        .args([
            "separate",
            f.path().to_str().unwrap(),
            "a",
            "--max-degree",
            "5",
        ])
        .env("ARTIN_MAX_DEGREE", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_mirrors_text() {
    let (code, out, _) = run(GAMMA1, &["--format", "json", "eq", "z x", "x z"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "distinct");

    let (_, out, _) = run(GAMMA1, &["--format", "json", "act", "z x z x", "--at", "z"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["g1"], "x^2");
    assert_eq!(v["omega"], "b[x|1]^1 b[1|1]^1");

    let (code, out, _) = run(
        "vertex a\nvertex b\nedge a b 3\n",
        &["--format", "json", "nf", "a"],
    );
    assert_eq!(code, 3);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"], "precondition");
}

#[test]
fn oracle_flag_adds_verdicts() {
    let square = "vertex a\nvertex b\nedge a b 2\n";
    let (code, out, _) = run(square, &["--oracle", "eq", "a b", "b a"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "equal\noracle bfs: proven-trivial\noracle raag: equal\n"
    );
}
