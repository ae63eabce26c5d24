use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
}

fn boardnet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boardnet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn toy_happy_path_writes_report_and_net() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let net = dir.path().join("journals.net");
    let input = fixture("toy_boards.csv");
    let out = boardnet(&[
        "analyze",
        "--input",
        input.to_str().unwrap(),
        "--slice",
        "3",
        "--out",
        report.to_str().unwrap(),
        "--export-net",
        net.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());

    let json: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["schema"], "1");
    assert_eq!(json["aggregates"]["n"], 6);
    assert_eq!(json["aggregates"]["m"], 5);
    assert_eq!(json["affiliation"]["seats"], 17);
    assert_eq!(json["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(json["slices"][0]["threshold"], 3);
    assert_eq!(
        json["slices"][0]["components"][0]["members"],
        serde_json::json!(["Alpha Review", "Beta Letters"])
    );

    let net_text = fs::read_to_string(&net).unwrap();
    assert!(net_text.starts_with("*Vertices 6\n1 \"Alpha Review\"\n"));
    assert!(net_text.ends_with("*Edges\n1 2 3\n1 3 2\n2 3 1\n3 4 1\n4 5 1\n"));
}

#[test]
fn missing_input_exits_2() {
    let out = boardnet(&["analyze", "--input", "missing.csv"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no such input"), "{}", stderr(&out));
}

#[test]
fn unknown_flag_prints_usage() {
    let out = boardnet(&["analyze", "--input", "x.csv", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("Usage"), "{}", stderr(&out));
}

#[test]
fn zero_slice_is_a_usage_error() {
    let input = fixture("toy_boards.csv");
    let out = boardnet(&["analyze", "--input", input.to_str().unwrap(), "--slice", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_failure_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    fs::write(&bad, "actor,event\na,J1\nb,J1,extra\n").unwrap();
    let out = boardnet(&["analyze", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn degree_fixture_stats_only() {
    let input = fixture("table2_degrees.csv");
    let out = boardnet(&["analyze", "--input", input.to_str().unwrap(), "--stats-only"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let agg = &json["aggregates"];
    assert!((agg["meanDegree"].as_f64().unwrap() - 5.31).abs() < 0.01);
    assert!((agg["sdDegreePopulation"].as_f64().unwrap() - 4.66).abs() < 0.01);
    assert!((agg["degreeCentralization"].as_f64().unwrap() - 0.184).abs() < 0.001);
    assert_eq!(agg["medianDegree"], 5.0);
    assert_eq!(agg["m"], 162);
    assert!(agg["betweennessCentralization"].is_null());
}

#[test]
fn degree_fixture_needs_stats_only() {
    let input = fixture("table2_degrees.csv");
    let out = boardnet(&["analyze", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--stats-only"));
}

#[test]
fn degree_fixture_tables() {
    let input = fixture("table2_degrees.csv");
    let out = boardnet(&[
        "analyze",
        "--input",
        input.to_str().unwrap(),
        "--stats-only",
        "--tables",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let first_row: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(first_row, vec!["0", "10", "0.164", "0.164"]);
    assert!(text.contains("Journal of Documentation"));
}

#[test]
fn tables_for_affiliation_input() {
    let input = fixture("toy_boards.csv");
    let out = boardnet(&["analyze", "--input", input.to_str().unwrap(), "--tables"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("Degree  Freq  Freq%  CumFreq\n"));
    assert!(text.contains("BetweennessRank"));
    assert!(text.contains("LineValue"));
}

#[test]
fn exports_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let input = fixture("toy_boards.csv");
    let run = |tag: &str| {
        let report = dir.path().join(format!("{tag}.json"));
        let csv = dir.path().join(format!("{tag}.csv"));
        let dot = dir.path().join(format!("{tag}.dot"));
        let out = boardnet(&[
            "analyze",
            "--input",
            input.to_str().unwrap(),
            "--slice",
            "2",
            "--slice",
            "3",
            "--closeness-variant",
            "component",
            "--density-variant",
            "no-loops",
            "--out",
            report.to_str().unwrap(),
            "--export-csv",
            csv.to_str().unwrap(),
            "--export-dot",
            dot.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        [report, csv, dot].map(|p| fs::read(p).unwrap())
    };
    let first = run("a");
    assert_eq!(first, run("b"));

    let json: Value = serde_json::from_slice(&first[0]).unwrap();
    assert_eq!(json["options"]["closenessVariant"], "componentNormalized");
    assert_eq!(json["options"]["densityVariant"], "noLoops");
    assert_eq!(json["density"], json["aggregates"]["densityNoLoops"]);
    assert_eq!(json["slices"].as_array().unwrap().len(), 2);
    assert!(String::from_utf8(first[1].clone())
        .unwrap()
        .starts_with("source,target,value\nAlpha Review,Beta Letters,3\n"));
    assert!(String::from_utf8(first[2].clone()).unwrap().starts_with("graph interlocks {\n"));
}

#[test]
fn two_mode_net_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("boards.net");
    fs::write(
        &input,
        "*Vertices 5 2\n1 \"J1\"\n2 \"J2\"\n3 \"a\"\n4 \"b\"\n5 \"c\"\n*Edges\n1 3\n1 4\n2 4\n2 5\n",
    )
    .unwrap();
    let out = boardnet(&["analyze", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["aggregates"]["m"], 1);
    assert_eq!(json["affiliation"]["actors"], 3);

    fs::write(&input, "*Vertices 3 1\n1 J\n2 a\n3 b\n*Edges\n2 3\n").unwrap();
    let out = boardnet(&["analyze", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 6"), "{}", stderr(&out));
}

#[test]
fn normalize_names_merges_case_variants() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("boards.csv");
    fs::write(&input, "actor,event\nSmith,J1\nSMITH,J2\n").unwrap();
    let path = input.to_str().unwrap();

    let exact: Value = serde_json::from_str(&stdout(&boardnet(&["analyze", "--input", path]))).unwrap();
    assert_eq!(exact["aggregates"]["m"], 0);
    let folded: Value = serde_json::from_str(&stdout(&boardnet(&[
        "analyze",
        "--input",
        path,
        "--normalize-names",
    ])))
    .unwrap();
    assert_eq!(folded["aggregates"]["m"], 1);
}
