//! End-to-end runs of the rectwalk binary: golden outputs for the worked
//! examples, exit codes, and byte-identical output across thread counts.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use rectwalk_core::pattern::{count_avoiding, FactorPattern};
use rectwalk_core::walk::{Walk, WalkClass};

fn rectwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rectwalk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = rectwalk(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf8 output")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

const WORKED_EXAMPLE: &str = "0,0,b;1,0,g;1,1,r;1,0,r;1,1,r;1,0,w;0,0,w";

#[test]
fn count_table_matches_the_frozen_excursion_counts() {
    let csv = stdout_of(&["count", "--class", "lhqe", "--n-max", "7"]);
    assert_eq!(csv, "n,value\n0,0\n1,1\n2,2\n3,6\n4,24\n5,116\n6,642\n7,3938\n");
}

#[test]
fn count_table_renders_json_with_string_values() {
    let text = stdout_of(&["count", "--class", "lhqe", "--n-max", "7", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let values = doc["values"].as_array().unwrap();
    assert_eq!(values.len(), 8);
    assert_eq!(values[7]["n"], 7);
    assert_eq!(values[7]["value"], "3938");
}

#[test]
fn bounds_prints_the_reference_decimal() {
    let text = stdout_of(&["bounds", "--L", "1"]);
    assert!(text.contains("main_bound = 19675/1458 = 13.494513031550"), "{text}");
    let csv = stdout_of(&["bounds", "--L", "1", "--format", "csv"]);
    assert_eq!(
        csv,
        "quantity,exact,decimal\n\
         main_bound,19675/1458,13.494513031550\n\
         refined_bound,19675/1458,13.494513031550\n\
         radius,1458/19675,0.074104193138\n"
    );
}

#[test]
fn bounds_takes_an_explicit_factor_length() {
    let text = stdout_of(&["bounds", "--L", "1", "--L0", "1"]);
    assert!(text.contains("refined_bound = 25/2 = 12.500000000000"), "{text}");
    assert!(text.contains("radius = 2/25 = 0.080000000000"), "{text}");
}

#[test]
fn paving_a_single_step_draws_one_rectangle() {
    let text = stdout_of(&["pave", "--walk", "0,0,w"]);
    assert_eq!(text, "+---+\n|   |\n+---+\n");
}

#[test]
fn paving_renders_svg_when_asked() {
    let svg = stdout_of(&["pave", "--walk", WORKED_EXAMPLE, "--format", "svg"]);
    assert!(svg.starts_with("<svg"), "{svg}");
    assert_eq!(svg.matches("<rect").count(), 7);
}

#[test]
fn procedure_reads_the_walk_back_from_the_json_pavement() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let json = stdout_of(&["pave", "--walk", WORKED_EXAMPLE, "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["rects"].as_array().unwrap().len(), 7);
    fs::write(&path, &json).unwrap();
    let text = stdout_of(&["procedure", path.to_str().unwrap()]);
    assert_eq!(text, format!("{WORKED_EXAMPLE}\n"));
    let as_json = stdout_of(&["procedure", path.to_str().unwrap(), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&as_json).unwrap();
    assert_eq!(doc["walk"], WORKED_EXAMPLE);
}

#[test]
fn inserting_one_copy_lists_the_family_in_order() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    fs::write(&path, "0,0,g\n").unwrap();
    let text = stdout_of(&["insert", "--walk", "0,0,r", "--pattern-file", path.to_str().unwrap(), "--q", "1"]);
    assert_eq!(text, "0,0,g;0,0,r\n0,0,r;0,0,g\n");
}

#[test]
fn enumerate_lists_walks_in_enumeration_order() {
    let text = stdout_of(&["enumerate", "--n", "2", "--class", "lhqe"]);
    assert_eq!(text, "0,0,r;0,0,w\n0,0,g;0,0,w\n");
}

#[test]
fn factor_avoidance_counts_match_the_library() {
    let csv = stdout_of(&["avoid-count", "--walk", "0,0,r", "--n-max", "4"]);
    let p = FactorPattern::new(Walk::parse("0,0,r").unwrap()).unwrap();
    let mut expected = String::from("n,value\n");
    for n in 0..=4 {
        let b = count_avoiding(n, WalkClass::LhqwAdm, &p).unwrap();
        expected.push_str(&format!("{n},{b}\n"));
    }
    assert_eq!(csv, expected);
    assert!(csv.starts_with("n,value\n0,1\n1,1\n2,3\n"), "{csv}");
}

#[test]
fn geometric_avoidance_counts_the_single_segment_avoiders() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.json");
    fs::write(&path, r#"{"segments":[{"id":0,"dir":"h","axis":1,"span":[0,1]}]}"#).unwrap();
    let csv = stdout_of(&["avoid-count", "--pattern-file", path.to_str().unwrap(), "--n-max", "3"]);
    assert_eq!(csv, "n,value\n0,0\n1,1\n2,1\n3,1\n");
}

#[test]
fn the_out_flag_writes_the_same_bytes_as_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let streamed = stdout_of(&["count", "--class", "lhqwadm", "--n-max", "6"]);
    let out = rectwalk(&["count", "--class", "lhqwadm", "--n-max", "6", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap(), streamed);
}

#[test]
fn caps_stop_large_runs_unless_forced() {
    let out = rectwalk(&["enumerate", "--n", "13", "--class", "lhqe"]);
    assert_eq!(exit_code(&out), 2);
    let message = String::from_utf8_lossy(&out.stderr);
    assert!(message.contains("--n") && message.contains("--force"), "{message}");

    let out = rectwalk(&["count", "--class", "lhqe", "--n-max", "60"]);
    assert_eq!(exit_code(&out), 2);
    let forced = stdout_of(&["count", "--class", "lhqe", "--n-max", "51", "--force"]);
    assert_eq!(forced.lines().count(), 53);
}

#[test]
fn usage_errors_exit_with_two() {
    let out = rectwalk(&["avoid-count", "--n-max", "3"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--pattern-file"));

    let out = rectwalk(&["count", "--class", "hqw", "--n-max", "3"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--class"));

    let out = rectwalk(&["pave", "--walk", "0,0,x"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--walk"));

    let out = rectwalk(&["pave", "--walk", "0,0,w", "--format", "csv"]);
    assert_eq!(exit_code(&out), 2);

    let out = rectwalk(&["no-such-command"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verification_passes_and_does_not_depend_on_threads() {
    let one = rectwalk(&["verify", "all", "--n", "5", "--threads", "1"]);
    let four = rectwalk(&["verify", "all", "--n", "5", "--threads", "4"]);
    assert_eq!(exit_code(&one), 0);
    assert_eq!(exit_code(&four), 0);
    assert_eq!(one.stdout, four.stdout);
    let text = String::from_utf8(one.stdout).unwrap();
    for suite in ["roundtrip", "distinctness", "insertion", "inequality", "proportion"] {
        assert!(text.contains(&format!("{suite}: PASS")), "{text}");
    }
}

#[test]
fn a_single_suite_runs_alone() {
    let text = stdout_of(&["verify", "roundtrip", "--n", "4"]);
    assert_eq!(text, "roundtrip: PASS\n");
}

fn assert_is_file(path: &Path) {
    assert!(path.is_file(), "{} missing", path.display());
}

#[test]
fn svg_output_lands_in_the_requested_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.svg");
    let out = rectwalk(&["pave", "--walk", WORKED_EXAMPLE, "--format", "svg", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_is_file(&path);
}
