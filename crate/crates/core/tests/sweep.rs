use std::fs;

use skewham::experiment::{run_sweep, ExperimentConfig, CSV_HEADER};

fn cfg(dir: &std::path::Path, name: &str) -> ExperimentConfig {
    ExperimentConfig { ns: vec![4], betas: vec![0.0], trials: 1, seed: 3, out: dir.join(name) }
}

#[test]
fn single_unperturbed_row() {
    let dir = tempfile::tempdir().unwrap();
    let c = cfg(dir.path(), "one.csv");
    run_sweep(&c).unwrap();
    let text = fs::read_to_string(&c.out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], CSV_HEADER);
    assert_eq!(lines.len(), 2);
    let fields: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(fields[10], "ok");
    // rel_dist, both skew deviations, both isotropy deviations and the gap
    for f in &fields[3..9] {
        assert!(f.parse::<f64>().unwrap() <= 1e-8, "{}", lines[1]);
    }
}

#[test]
fn floats_carry_seventeen_digits() {
    let dir = tempfile::tempdir().unwrap();
    let c = ExperimentConfig { betas: vec![1e-3], ..cfg(dir.path(), "digits.csv") };
    run_sweep(&c).unwrap();
    let text = fs::read_to_string(&c.out).unwrap();
    let row = text.lines().nth(1).unwrap();
    for f in row.split(',').skip(1).take(8).filter(|f| f.contains('e')) {
        let mantissa = f.trim_start_matches('-').split('e').next().unwrap();
        assert_eq!(mantissa.replace('.', "").len(), 17, "{f}");
    }
}

#[test]
fn unwritable_path_fails_before_work() {
    let dir = tempfile::tempdir().unwrap();
    let c = ExperimentConfig { out: dir.path().join("missing/dir/x.csv"), ..cfg(dir.path(), "") };
    assert!(matches!(run_sweep(&c), Err(skewham::Error::Io(_))));
}

#[test]
fn rerun_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = ExperimentConfig { ns: vec![3, 6], betas: vec![1e-3, 1e-2], trials: 4, ..cfg(dir.path(), "a.csv") };
    let b = ExperimentConfig { out: dir.path().join("b.csv"), ..a.clone() };
    run_sweep(&a).unwrap();
    run_sweep(&b).unwrap();
    assert_eq!(fs::read(&a.out).unwrap(), fs::read(&b.out).unwrap());
}
