use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use signotope::{read_mono, tower_coloring, wiring_diagram, SignFunction};
use tempfile::TempDir;

fn run(args: &[&str]) -> (i32, Value) {
    let out: Output = Command::new(env!("CARGO_BIN_EXE_signotope"))
        .arg("--jsonl")
        .args(args)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).expect("utf-8");
    let manifest = serde_json::from_str(stdout.trim()).unwrap_or(Value::Null);
    (out.status.code().expect("exit code"), manifest)
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn path_in(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

#[test]
fn verify_reports_violating_quadruple() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex.mono", "MONO 1\nr=3 n=4\n-+-+\n");
    let (code, m) = run(&["verify", "--in", &f]);
    assert_eq!(code, 1);
    assert_eq!(m["subcommand"], "verify");
    assert_eq!(m["result"]["monotone"], false);
    assert_eq!(m["result"]["monotone_witness"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn tower_verify_and_emit() {
    let dir = TempDir::new().unwrap();
    let out = path_in(&dir, "t.mono");
    let (code, m) = run(&["tower", "--r", "3", "--n", "3", "--verify", "--emit", &out]);
    assert_eq!(code, 0);
    assert_eq!(m["result"]["N"], 8);
    assert_eq!(m["result"]["monotone"], true);
    assert!(m["result"]["longest_path"]["best_minus"].as_u64().unwrap() <= 7);
    assert_eq!(read_mono(&out).unwrap(), tower_coloring(3, 3).unwrap());
    let (code, _) = run(&["verify", "--in", &out]);
    assert_eq!(code, 0);
}

#[test]
fn resource_caps_exit_three() {
    let (code, m) = run(&["tower", "--r", "5", "--n", "4"]);
    assert_eq!(code, 3);
    assert_eq!(m["result"]["error"], "TooLarge");
    let (code, _) = run(&["count", "--r", "3", "--n", "7", "--max-nodes", "100"]);
    assert_eq!(code, 3);
    let (code, _) = run(&["count", "--r", "3", "--n", "40", "--max-edges", "1000"]);
    assert_eq!(code, 3);
}

#[test]
fn usage_errors_exit_two() {
    let (code, _) = run(&["count", "--r", "3"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, m) = run(&["verify", "--in", "/nonexistent/file.mono"]);
    assert_eq!(code, 2);
    assert_eq!(m["result"]["error"], "Io");
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.mono", "MONO 1\nr=3 n=4\n-+x+\n");
    let (code, m) = run(&["verify", "--in", &f]);
    assert_eq!(code, 2);
    assert_eq!(m["result"]["error"], "Parse");
}

#[test]
fn comp_sample_records_seed_and_is_reproducible() {
    let args = ["comp", "--r", "4", "--h", "2", "--verify", "sample:50:11"];
    let (code, a) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(a["seed"], 11);
    assert_eq!(a["result"]["zeros"], 48);
    assert_eq!(a["result"]["all_monotone"], true);
    let (_, b) = run(&args);
    assert_eq!(a["result"], b["result"]);
}

#[test]
fn comp_emits_ternary_file() {
    let dir = TempDir::new().unwrap();
    let out = path_in(&dir, "c.mono");
    let (code, m) = run(&["comp", "--r", "3", "--h", "2", "--verify", "all", "--emit", &out]);
    assert_eq!(code, 0);
    assert_eq!(m["result"]["completions_checked"], 64);
    let c = read_mono(&out).unwrap();
    assert_eq!(c.zero_positions().len(), 6);
}

#[test]
fn count_is_independent_of_workers() {
    let (_, one) = run(&["count", "--r", "3", "--n", "6", "--workers", "1"]);
    let (_, four) = run(&["count", "--r", "3", "--n", "6", "--workers", "4", "--symmetry"]);
    assert_eq!(one["result"]["count"], 908);
    assert_eq!(four["result"]["count"], 908);
}

#[test]
fn ramsey_witness_checks_out_with_verify_and_path() {
    let dir = TempDir::new().unwrap();
    let w = path_in(&dir, "w.mono");
    let (code, m) = run(&["ramsey", "--r", "3", "--path", "4", "--max", "8", "--witness", &w]);
    assert_eq!(code, 0);
    assert_eq!(m["result"]["value"], 7);
    let (code, _) = run(&["verify", "--in", &w]);
    assert_eq!(code, 0);
    let (code, p) = run(&["path", "--in", &w]);
    assert_eq!(code, 0);
    assert!(p["result"]["best_minus"].as_u64().unwrap() < 4);
    assert!(p["result"]["best_plus"].as_u64().unwrap() < 4);

    let (code, m) = run(&["ramsey", "--r", "2", "--path", "4", "--max", "8"]);
    assert_eq!(code, 0);
    assert_eq!(m["result"]["status"], "lower_bound_only");
}

#[test]
fn project_and_wiring_outputs_round_trip() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c.mono", "MONO 1\nr=3 n=4\n----\n");
    let p = path_in(&dir, "p.mono");
    let (code, m) = run(&["project", "--in", &f, "--i", "4", "--out", &p]);
    assert_eq!(code, 0);
    assert_eq!(m["result"]["colors"], "---");
    assert_eq!(read_mono(&p).unwrap(), SignFunction::constant(2, 3, signotope::Sign::Minus).unwrap());

    let svg = path_in(&dir, "w.svg");
    let sweep = path_in(&dir, "w.txt");
    let (code, _) = run(&["wiring", "--in", &f, "--svg", &svg, "--sweep", &sweep]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&sweep).unwrap();
    let parsed = signotope::WiringDiagram::parse_sweep(&text).unwrap();
    let c = read_mono(&f).unwrap();
    assert_eq!(parsed, wiring_diagram(&c).unwrap());
    assert_eq!(std::fs::read_to_string(&svg).unwrap(), signotope::render_svg(&parsed));
    assert!(Path::new(&svg).exists());

    let bad = write(&dir, "bad.mono", "MONO 1\nr=3 n=4\n-+-+\n");
    let (code, m) = run(&["wiring", "--in", &bad, "--svg", &svg]);
    assert_eq!(code, 1);
    assert_eq!(m["result"]["error"], "NotMonotone");
}

#[test]
fn selftest_single_criterion() {
    let (code, m) = run(&["selftest", "--criterion", "1"]);
    assert_eq!(code, 0);
    assert_eq!(m["result"]["all_pass"], true);
    let (code, _) = run(&["selftest", "--criterion", "42"]);
    assert_eq!(code, 2);
}
