use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_quandles"));
    cmd.env_remove("QUANDLE_OUTPUT_CAP");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn construct(dir: &Path, name: &str, args: &[&str]) -> String {
    let o = run(&[&["construct"], args].concat());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    write(dir, name, &stdout(&o)).to_str().unwrap().to_string()
}

#[test]
fn q8_trefoil_check_reports_one_and_i() {
    let dir = TempDir::new().unwrap();
    let q8 = construct(dir.path(), "q8.qdl", &["galex", "--group", "quaternion8", "--aut-map", "0,1,4,5,6,7,2,3"]);
    let named = construct(dir.path(), "named.qdl", &["catalog-quandle", "--name", "galex-q8-ijk"]);
    assert_eq!(fs::read_to_string(&q8).unwrap(), fs::read_to_string(&named).unwrap());

    let o = run(&["check", "trefoil", "--quandle", &q8]);
    assert_eq!((code(&o), stdout(&o).as_str()), (2, "NON-ADMISSIBLE witness x=0 y=2\n"));
    let o = run(&["check", "hopf", "--quandle", &q8]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "ADMISSIBLE\n"));

    let labels = stdout(&run(&["catalog", "quaternion8"]));
    assert!(labels.contains("0\t1\n") && labels.contains("2\ti\n"));
}

#[test]
fn check_and_color_verdicts_agree() {
    let dir = TempDir::new().unwrap();
    let quandles = [
        construct(dir.path(), "q8.qdl", &["catalog-quandle", "--name", "galex-q8-ijk"]),
        construct(dir.path(), "r3.qdl", &["catalog-quandle", "--name", "dihedral:3"]),
        construct(dir.path(), "hx.qdl", &["hopf-ext", "--group", "symmetric:3", "--normal", "whole"]),
        construct(dir.path(), "s3.qdl", &["conj", "--group", "symmetric:3"]),
    ];
    for q in &quandles {
        for kind in ["hopf", "trefoil"] {
            let check = code(&run(&["check", kind, "--quandle", q]));
            let tangle = format!("builtin:{kind}");
            let color = code(&run(&["color", "--tangle", &tangle, "--quandle", q, "--admissible"]));
            assert_eq!(check, color, "{q} {kind}");
        }
    }
    assert_eq!(code(&run(&["check", "hopf", "--quandle", &quandles[2]])), 2);
}

#[test]
fn coloring_counts_and_lists() {
    let dir = TempDir::new().unwrap();
    let r3 = construct(dir.path(), "r3.qdl", &["catalog-quandle", "--name", "dihedral:3"]);
    let o = run(&["color", "--tangle", "builtin:hopf", "--quandle", &r3, "--count"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "3\n"));

    let o = run(&["color", "--tangle", "builtin:trefoil", "--quandle", &r3, "--list"]);
    let rows: Vec<Vec<usize>> = stdout(&o)
        .lines()
        .map(|l| l.split(' ').map(|t| t.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.len() == 4 && r[0] == r[3]));

    let o = bin()
        .args(["color", "--tangle", "builtin:trefoil", "--quandle", &r3, "--list"])
        .env("QUANDLE_OUTPUT_CAP", "8")
        .output()
        .unwrap();
    assert_eq!(code(&o), 64);
    assert!(o.stdout.is_empty());
    let o = bin()
        .args(["color", "--tangle", "builtin:trefoil", "--quandle", &r3, "--list"])
        .env("QUANDLE_OUTPUT_CAP", "9")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
}

#[test]
fn tangle_files_round_trip_bit_exactly() {
    let dir = TempDir::new().unwrap();
    let text = stdout(&run(&["construct", "tangle", "--name", "trefoil"]));
    assert_eq!(text, "arcs 4\nstart 0\nend 3\ncrossing + 1 0 2\ncrossing + 0 2 1\ncrossing + 2 1 3\n");
    let file = write(dir.path(), "t.tng", &text);
    let file = file.to_str().unwrap();
    assert_eq!(stdout(&run(&["validate", "tangle", file])), "OK\n");
    let r3 = construct(dir.path(), "r3.qdl", &["catalog-quandle", "--name", "dihedral:3"]);
    let from_file = stdout(&run(&["color", "--tangle", file, "--quandle", &r3, "--list"]));
    let builtin = stdout(&run(&["color", "--tangle", "builtin:trefoil", "--quandle", &r3, "--list"]));
    assert_eq!(from_file, builtin);
}

#[test]
fn validate_reports_violations_and_syntax_errors() {
    let dir = TempDir::new().unwrap();
    let broken = write(dir.path(), "broken.qdl", "quandle 2\n0 0\n0 1\n");
    let o = run(&["validate", "quandle", broken.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("INVALID "));

    let garbage = write(dir.path(), "garbage.qdl", "quandle 2\n0 x\n1 1\n");
    let o = run(&["validate", "quandle", garbage.to_str().unwrap()]);
    assert_eq!(code(&o), 65);
    assert!(o.stdout.is_empty() && !o.stderr.is_empty());

    let group = write(dir.path(), "z2.grp", "group 2\n0 1\n1 0\n");
    assert_eq!(code(&run(&["validate", "group", group.to_str().unwrap()])), 0);
    let not_group = write(dir.path(), "bad.grp", "group 2\n0 1\n0 1\n");
    assert_eq!(code(&run(&["validate", "group", not_group.to_str().unwrap()])), 1);

    let tangle = write(dir.path(), "bad.tng", "arcs 2\nstart 0\nend 1\ncrossing + 5 0 1\n");
    assert_eq!(code(&run(&["validate", "tangle", tangle.to_str().unwrap()])), 1);
    assert_eq!(code(&run(&["validate", "tangle", dir.path().join("missing").to_str().unwrap()])), 65);
}

#[test]
fn constructions_validate() {
    let cases: [&[&str]; 6] = [
        &["conj", "--group", "alternating4"],
        &["galex", "--group", "dihedral:4", "--aut", "3"],
        &["hopf-ext", "--group", "dihedral:4", "--normal", "center"],
        &["hopf-ext", "--group", "quaternion8", "--normal", "index:2"],
        &["catalog-quandle", "--name", "trivial:5"],
        &["galex", "--group", "product(cyclic:2,cyclic:2)", "--aut", "5"],
    ];
    for args in cases {
        let o = run(&[&["construct"], args].concat());
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        let mut child = bin()
            .args(["validate", "quandle", "-"])
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(&o.stdout).unwrap();
        let v = child.wait_with_output().unwrap();
        assert_eq!(stdout(&v), "OK\n", "{args:?}");
    }
}

#[test]
fn group_file_input() {
    let dir = TempDir::new().unwrap();
    let z3 = write(dir.path(), "z3.grp", "# cyclic of order 3\ngroup 3\n0 1 2\n1 2 0\n2 0 1\n");
    let o = run(&["construct", "galex", "--group", z3.to_str().unwrap(), "--aut", "1"]);
    assert_eq!(stdout(&o), "quandle 3\n0 2 1\n2 1 0\n1 0 2\n");
}

#[test]
fn usage_errors_exit_64() {
    let dir = TempDir::new().unwrap();
    let r3 = construct(dir.path(), "r3.qdl", &["catalog-quandle", "--name", "dihedral:3"]);
    let cases: [&[&str]; 8] = [
        &[],
        &["frobnicate"],
        &["color", "--tangle", "builtin:hopf", "--quandle", &r3],
        &["color", "--tangle", "builtin:hopf", "--quandle", &r3, "--count", "--list"],
        &["color", "--tangle", "builtin:figure8", "--quandle", &r3, "--count"],
        &["construct", "hopf-ext", "--group", "symmetric:3", "--normal", "elements:0,1"],
        &["construct", "conj", "--group", "not-a-group"],
        &["census", "--max-order", "65"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(code(&o), 64, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn presentations() {
    let dir = TempDir::new().unwrap();
    let t1 = construct(dir.path(), "t1.qdl", &["catalog-quandle", "--name", "trivial:1"]);
    assert_eq!(stdout(&run(&["present", "as", "--quandle", &t1])), "# associated_group\ngen g0\nrel g0^-1 g0 g0 = g0\n");
    let hopf = stdout(&run(&["present", "fundamental", "--tangle", "builtin:hopf"]));
    assert_eq!(hopf.lines().filter(|l| l.starts_with("gen ")).count(), 3);
    assert_eq!(hopf.lines().filter(|l| l.starts_with("rel ")).count(), 2);
}

#[test]
fn census_is_deterministic_across_job_counts() {
    let one = run(&["--jobs", "1", "census", "--max-order", "8", "--dedup"]);
    let many = run(&["--jobs", "4", "census", "--max-order", "8", "--dedup"]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, many.stdout);
    let text = stdout(&one);
    assert!(text.starts_with("# group_name\t"));
    assert!(text.lines().any(|l| l.starts_with("quaternion8\t8\t") && l.ends_with("\tfalse")));
}

#[test]
fn output_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("out.tsv");
    let o = run(&["catalog", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let text = fs::read_to_string(path).unwrap();
    assert!(text.lines().any(|l| l == "quaternion8\t8\t24"));
    assert!(text.lines().any(|l| l == "symmetric:4\t24\t24"));
}
