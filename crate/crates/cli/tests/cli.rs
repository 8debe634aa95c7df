use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antiramsey"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = run(&all);
    (code(&o), serde_json::from_slice(&o.stdout).expect("JSON on stdout"))
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn chi_f_of_k6_under_matchings() {
    let (c, v) = json(&["chi-f", "--graph", "K6", "--family", "matchings"]);
    assert_eq!(c, 0);
    assert_eq!(v["value"], 3);
    assert_eq!(v["exact"], true);
    assert_eq!(v["witness_edges"].as_array().unwrap().len(), 3);
}

#[test]
fn graph_file_and_literal_agree() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("w5.txt");
    // W5: rim 0..4, apex 5.
    fs::write(&file, "6 10\n0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n1 5\n2 5\n3 5\n4 5\n").unwrap();
    let (_, a) = json(&["chi-f", "--graph", path_str(&file), "--family", "matchings"]);
    let (_, b) = json(&["chi-f", "--graph", "W5", "--family", "MATCHINGS"]);
    assert_eq!(a["value"], 3);
    assert_eq!(a["value"], b["value"]);
}

#[test]
fn smd_digraph_has_no_transversal() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("smd.txt");
    let (c, v) = json(&[
        "smd",
        "--m",
        "3",
        "--d",
        "2",
        "--variant",
        "basic",
        "--out",
        path_str(&file),
    ]);
    assert_eq!(c, 0);
    assert_eq!(v["s"], 4);
    assert_eq!(v["verified"], true);
    let o = run(&["transversal", "--exact", "--digraph", path_str(&file)]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("no transversal"));
}

#[test]
fn f_exact_examples() {
    let o = run(&["f-exact", "--n", "4", "--graph", "2K2", "--family", "matchings"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).trim_end().ends_with("= 1"));
    let (c, v) = json(&["f-exact", "--n", "5", "--graph", "K3", "--family", "matchings"]);
    assert_eq!(c, 0);
    assert_eq!(v["f"], 5);
    assert_eq!(v["attestation"], "exhaustive");
}

#[test]
fn written_files_round_trip_through_readers() {
    let dir = tempfile::tempdir().unwrap();
    let lb = dir.path().join("lb.txt");
    let (c, v) = json(&[
        "lb-coloring",
        "--n",
        "6",
        "--graph",
        "K4",
        "--family",
        "matchings",
        "--out",
        path_str(&lb),
    ]);
    assert_eq!(c, 0);
    assert_eq!(v["certified"], true);
    let text = fs::read_to_string(&lb).unwrap();
    let psi = antiramsey_core::extremal::EdgeColoring::parse(&text).unwrap();
    assert_eq!(psi.to_text(), text);
    assert_eq!(psi.k() + 1, v["f_at_least"].as_u64().unwrap() as usize);

    // The lower-bound coloring has no matching-colored K4.
    let o = run(&[
        "check-copy",
        "--coloring",
        path_str(&lb),
        "--graph",
        "K4",
        "--family",
        "matchings",
    ]);
    assert_eq!(code(&o), 2);
    assert_eq!(stdout(&o), "none\n");

    let av = dir.path().join("avoider.txt");
    let (_, v) = json(&[
        "f-exact",
        "--n",
        "5",
        "--graph",
        "K3",
        "--family",
        "matchings",
        "--out",
        path_str(&av),
    ]);
    let text = fs::read_to_string(&av).unwrap();
    let psi = antiramsey_core::extremal::EdgeColoring::parse(&text).unwrap();
    assert_eq!(psi.to_text(), text);
    assert_eq!(v["avoider_colors"], psi.k());

    let dg = dir.path().join("d.txt");
    run(&[
        "smd",
        "--m",
        "2",
        "--d",
        "3",
        "--variant",
        "divisible",
        "--out",
        path_str(&dg),
    ]);
    let text = fs::read_to_string(&dg).unwrap();
    let d = antiramsey_core::transversal::PartedDigraph::parse(&text).unwrap();
    assert_eq!(d.to_text(), text);
}

#[test]
fn check_copy_finds_rainbow_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("rainbow.txt");
    fs::write(&file, "4 6\n0 1 0\n0 2 1\n0 3 2\n1 2 3\n1 3 4\n2 3 5\n").unwrap();
    let (c, v) = json(&[
        "check-copy",
        "--coloring",
        path_str(&file),
        "--graph",
        "K3",
        "--family",
        "edge",
    ]);
    assert_eq!(c, 0);
    assert_eq!(v["map"].as_array().unwrap().len(), 3);
}

#[test]
fn seeded_runs_are_deterministic() {
    let args = [
        "transversal",
        "--itl",
        "--seed",
        "11",
        "--m",
        "4",
        "--s",
        "13",
        "--d",
        "3",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&[
        "transversal",
        "--itl",
        "--seed",
        "12",
        "--m",
        "4",
        "--s",
        "13",
        "--d",
        "3",
    ]);
    assert_eq!(code(&c), 0);
}

#[test]
fn multifold_and_rainbow_cut() {
    let (c, v) = json(&[
        "transversal",
        "--multifold",
        "2",
        "--seed",
        "1",
        "--m",
        "2",
        "--s",
        "9",
        "--d",
        "1",
    ]);
    assert_eq!(c, 0);
    assert_eq!(v["fold"], 2);

    // K_20 with classes {0..9} and {10..19}: rainbow between them, one color inside.
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("psi.txt");
    let mut text = String::from("20 101\n");
    let mut next = 1;
    for u in 0..20 {
        for v in u + 1..20 {
            let c = if (u < 10) == (v < 10) {
                0
            } else {
                next += 1;
                next - 1
            };
            text.push_str(&format!("{u} {v} {c}\n"));
        }
    }
    fs::write(&file, text).unwrap();
    let (c, v) = json(&[
        "rainbow-cut",
        "--coloring",
        path_str(&file),
        "--m",
        "2",
        "--p",
        "2",
        "--s",
        "5",
    ]);
    assert_eq!(c, 0, "{v}");
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);
}

#[test]
fn classify_turan_and_ex() {
    let (_, v) = json(&["classify", "--graph", "K7", "--family", "matchings", "--n", "7"]);
    assert_eq!(v["case"], "i");
    assert_eq!(v["coefficient"], "1/3");
    assert!(v["lower_bound"]["f_at_least"].as_u64().unwrap() >= 2);
    let (_, v) = json(&["turan", "--n", "10", "--r", "3"]);
    assert_eq!(v["value"], 25);
    let (c, v) = json(&["ex-small", "--n", "8", "--graph", "C4"]);
    assert_eq!(c, 0);
    assert_eq!(v["value"], 11);
    let (_, v) = json(&["stable", "--graph", "K4", "--family", "edge"]);
    assert_eq!(v["stable"], false);
    let (_, v) = json(&["decomp-size", "--graph", "K4", "--family", "matchings"]);
    assert_eq!(v["value"], 3);
    let (_, v) = json(&["deck", "--graph", "B4", "--family", "matchings"]);
    assert_eq!(v["count"], 3);
}

#[test]
fn tables_match_closed_forms() {
    let (c, v) = json(&["tables"]);
    assert_eq!(c, 0);
    assert_eq!(v["all_match"], true);
    assert!(v["rows"].as_array().unwrap().len() >= 40);
}

#[test]
fn exit_codes_for_errors() {
    let o = run(&["chi-f", "--graph", "K6"]);
    assert_eq!(code(&o), 1);
    let o = run(&["--json", "chi-f", "--graph", "missing.txt", "--family", "matchings"]);
    assert_eq!(code(&o), 1);
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "invalid_input");
    let o = run(&["--json", "--budget", "10", "ex-small", "--n", "8", "--graph", "C4"]);
    assert_eq!(code(&o), 3);
    let o = run(&[
        "--json",
        "--budget",
        "10",
        "f-exact",
        "--n",
        "5",
        "--graph",
        "K4-e",
        "--family",
        "matchings",
    ]);
    assert_eq!(code(&o), 3);
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "budget_exceeded");
    let o = run(&[
        "transversal",
        "--itl",
        "--seed",
        "1",
        "--m",
        "3",
        "--s",
        "2",
        "--d",
        "2",
    ]);
    assert_eq!(code(&o), 1);
}
