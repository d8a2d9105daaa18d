use std::fs;
use std::path::Path;
use std::process::Command;

use skewham::cli::dispatch;
use skewham::matcore::{j_matrix, parse_matrix, write_matrix_file};
use skewham::DenseMatrix;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["skewham"];
    argv.extend_from_slice(args);
    let code = dispatch(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn e12_basis(dir: &Path) -> String {
    let mut x = DenseMatrix::zeros(4, 2);
    x[(0, 0)] = 1.0;
    x[(1, 1)] = 1.0;
    let p = dir.join("basis.txt");
    write_matrix_file(&p, &x).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn realize_unit_basis() {
    let dir = tempfile::tempdir().unwrap();
    let basis = e12_basis(dir.path());
    let (code, out, _) = run(&["realize", &basis]);
    assert_eq!(code, 0);
    let h = parse_matrix(&out).unwrap();
    let mut expected = DenseMatrix::zeros(4, 4);
    expected[(1, 0)] = 1.0;
    expected[(2, 3)] = 1.0;
    assert_eq!(h, expected);

    let dest = dir.path().join("h.txt");
    let (code, out, _) = run(&["realize", &basis, "--out", dest.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    assert_eq!(parse_matrix(&fs::read_to_string(dest).unwrap()).unwrap(), expected);
}

#[test]
fn check_reports_structure() {
    let dir = tempfile::tempdir().unwrap();
    let jp = dir.path().join("j.txt");
    write_matrix_file(&jp, &j_matrix(2)).unwrap();
    let (code, out, _) = run(&["check", jp.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("skew-Hamiltonian: no"), "{out}");

    let (code, out, _) = run(&["check", &e12_basis(dir.path())]);
    assert_eq!(code, 0);
    assert!(out.starts_with("isotropic: yes"), "{out}");
}

#[test]
fn element_spectrum_and_nearest() {
    let dir = tempfile::tempdir().unwrap();
    let basis = e12_basis(dir.path());

    let s = dir.path().join("s.txt");
    fs::write(&s, "3 3\n0 -1 0\n1 0 0\n0 0 0\n").unwrap();
    let (code, out, err) = run(&["element", &basis, s.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(parse_matrix(&out).unwrap().shape(), (4, 4));

    let (code, out, err) = run(&["spectrum", &basis, "-1,2"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(parse_matrix(&out).unwrap().shape(), (4, 4));

    let (code, _, err) = run(&["spectrum", &basis, "1,2i"]);
    assert_eq!(code, 1, "unpaired complex value must be rejected");
    assert!(err.contains("error"));

    let a = dir.path().join("a.txt");
    write_matrix_file(&a, &DenseMatrix::zeros(4, 4)).unwrap();
    let (code, out, _) = run(&["nearest", &basis, a.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (_, hhat, _) = run(&["realize", &basis]);
    assert_eq!(out, hhat);

    let (code, _, err) = run(&["nearest", &basis, a.to_str().unwrap(), "--spectrum", "1,-1"]);
    assert_eq!(code, 0, "{err}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["no-such-command"]).0, 1);
    assert_eq!(run(&["realize", "--bogus-flag", "x"]).0, 1);
    assert_eq!(run(&["realize", "/definitely/not/here.txt"]).0, 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "2 2\n1 2\n").unwrap();
    assert_eq!(run(&["realize", bad.to_str().unwrap()]).0, 1);

    let odd = dir.path().join("odd.txt");
    fs::write(&odd, "3 1\n1\n0\n0\n").unwrap();
    assert_eq!(run(&["realize", odd.to_str().unwrap()]).0, 1);

    assert_eq!(run(&["verify", "--suite", "nope"]).0, 1);
    assert_eq!(run(&["experiment", "--n", "8", "--out", "/definitely/not/here/x.csv"]).0, 2);
}

#[test]
fn experiment_to_stdout() {
    let (code, out, err) = run(&["experiment", "--n", "8", "--beta", "0.001", "--trials", "10", "--seed", "0"]);
    assert_eq!(code, 0, "{err}");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 11);
    assert!(lines[1..].iter().all(|l| l.ends_with(",ok")));
    assert!(err.contains("10 ok, 0 failed"));
}

#[test]
fn verify_suite_passes() {
    let (code, out, _) = run(&["verify", "--suite", "all", "--n", "2,3", "--bases", "1", "--trials", "20"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.trim_end().ends_with("0 failed"));

    let (code, out, _) = run(&["verify", "--suite", "membership", "--n", "3", "--csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("name,n,seed,defect,threshold,passed,trials\n"));
}

#[test]
fn binary_wires_streams_and_codes() {
    let bin = env!("CARGO_BIN_EXE_skewham");
    let ok = Command::new(bin).arg("--help").output().unwrap();
    assert!(ok.status.success());
    assert!(String::from_utf8_lossy(&ok.stdout).contains("realize"));
    let bad = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(!bad.stderr.is_empty());
}
