//! Command-line behavior: exit codes, output shapes, round-trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn dialg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dialg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn usage_errors_exit_two() {
    let out = dialg(&["check-gsb", fixture("malformed.json").to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let out = dialg(&["check-gsb", fixture("undeclared.json").to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let out = dialg(&["clifford", fixture("clifford_char2.json").to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let out = dialg(&["check-gsb", "/nonexistent/file.json"]);
    assert_eq!(code(&out), 2);
    let out = dialg(&["no-such-command"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn axiom_and_leibniz_checks() {
    let out = dialg(&["check-axioms", fixture("table_pq.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let out = dialg(&["check-axioms", fixture("table_bad.json").to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let out = dialg(&["check-leibniz", fixture("leibniz_2dim.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("suggested i0: [b]"));
}

#[test]
fn presentation_files_roundtrip_bit_exactly() {
    for name in ["s1_remark.json", "prime_pres.json"] {
        let path = fixture(name);
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed = dialg::io::PresentationFile::from_json(&text).unwrap();
        assert_eq!(parsed.canonical().unwrap().to_json(), text, "{name}");
    }
}

#[test]
fn reduce_prints_normal_forms() {
    let dir = tempfile::tempdir().unwrap();
    let pres = dir.path().join("t2.json");
    let out = dialg(&[
        "leibniz-env",
        fixture("leibniz_2dim.json").to_str().unwrap(),
        "--output",
        pres.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = dialg(&["reduce", pres.to_str().unwrap(), "a ^a"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "^a a - ^b");
    let out = dialg(&["reduce", pres.to_str().unwrap(), "b ^a"]);
    assert_eq!(stdout(&out).trim(), "0");

    let cl = dir.path().join("cl1.json");
    let out = dialg(&[
        "clifford",
        fixture("clifford1.json").to_str().unwrap(),
        "--output",
        cl.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = dialg(&["reduce", cl.to_str().unwrap(), "^x1 x1 x1"]);
    assert_eq!(stdout(&out).trim(), "^x1");
    // An undeclared letter in the diword is a usage error.
    let out = dialg(&["reduce", cl.to_str().unwrap(), "^z"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn irr_count_agrees_with_dim_on_a_gsb() {
    let dir = tempfile::tempdir().unwrap();
    let pres = dir.path().join("t2.json");
    dialg(&[
        "leibniz-env",
        fixture("leibniz_2dim.json").to_str().unwrap(),
        "--output",
        pres.to_str().unwrap(),
    ]);
    let irr = dialg(&["irr", pres.to_str().unwrap(), "--max-deg", "4", "--count", "--json"]);
    let dim = dialg(&["dim", pres.to_str().unwrap(), "--max-deg", "4", "--json"]);
    let irr: serde_json::Value = serde_json::from_str(&stdout(&irr)).unwrap();
    let dim: serde_json::Value = serde_json::from_str(&stdout(&dim)).unwrap();
    assert_eq!(irr["total"], dim["total"]);
}

#[test]
fn oracle_guardrail_refuses_large_runs() {
    let out = dialg(&[
        "dim",
        fixture("s1_remark.json").to_str().unwrap(),
        "--max-deg",
        "25",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn jobs_do_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let pres = dir.path().join("sl2.json");
    dialg(&[
        "leibniz-env",
        fixture("sl2.json").to_str().unwrap(),
        "--output",
        pres.to_str().unwrap(),
    ]);
    let one = dialg(&["check-gsb", pres.to_str().unwrap(), "--jobs", "1", "--json"]);
    let four = dialg(&["check-gsb", pres.to_str().unwrap(), "--jobs", "4", "--json"]);
    let strip = |s: &str| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
        // Timings vary between runs; everything else must match.
        v.as_object_mut().unwrap().remove("millis");
        for item in v["items"].as_array_mut().unwrap() {
            item.as_object_mut().unwrap().remove("micros");
        }
        v
    };
    assert_eq!(strip(&stdout(&one)), strip(&stdout(&four)));
}

#[test]
fn generated_presentations_are_reparseable() {
    // Pipeline composability: every construction's output feeds check-gsb.
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("leibniz-env", "heisenberg.json", "h.json"),
        ("clifford", "clifford1_zero.json", "c0.json"),
        ("bar-extend", "table_pq.json", "pq.json"),
    ];
    for (cmd, input, output) in cases {
        let input = fixture(input);
        let path = dir.path().join(output);
        let out = dialg(&[
            cmd,
            input.to_str().unwrap(),
            "--output",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0, "{cmd} {input:?}");
        let out = dialg(&["check-gsb", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "{cmd} output");
    }
}

#[test]
fn reduced_enveloping_flag() {
    let dir = tempfile::tempdir().unwrap();
    let full = dir.path().join("full.json");
    let reduced = dir.path().join("reduced.json");
    dialg(&[
        "leibniz-env",
        fixture("leibniz_2dim.json").to_str().unwrap(),
        "--output",
        full.to_str().unwrap(),
    ]);
    dialg(&[
        "leibniz-env",
        fixture("leibniz_2dim.json").to_str().unwrap(),
        "--reduced",
        "--output",
        reduced.to_str().unwrap(),
    ]);
    let full_file = dialg::io::PresentationFile::from_json(
        &std::fs::read_to_string(&full).unwrap(),
    )
    .unwrap();
    let reduced_file = dialg::io::PresentationFile::from_json(
        &std::fs::read_to_string(&reduced).unwrap(),
    )
    .unwrap();
    assert!(reduced_file.relations.len() < full_file.relations.len());
    let out = dialg(&["check-gsb", reduced.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
}
