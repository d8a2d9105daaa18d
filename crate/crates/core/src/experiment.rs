//! Perturbation experiment: perturb a minimum-norm realizer, recover a Lagrangian
//! basis from the perturbed Krylov sequence and fit the nearest structured realizer.
//!
//! Each trial draws its randomness from a seed hashed out of `(base seed, n, β, trial)`,
//! so a sweep is byte-reproducible regardless of how trials are scheduled.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lagrangian::{isotropize, random_lagrangian_onb_with, subspace_gap};
use crate::matcore::{condition_number, format_f64, j_mul, star_adjoint, DenseMatrix, Tolerance};
use crate::realization::{hhat, nearest_realizer};
use crate::sampling::{gaussian_matrix, mix_seed, seeded};

pub const CSV_HEADER: &str =
    "n,beta,trial,rel_dist_H_A,skewham_dev_A,skewham_dev_H,iso_dev_X,iso_dev_Y,gap,cond_XL,status";

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub ns: Vec<usize>,
    pub betas: Vec<f64>,
    pub trials: usize,
    pub seed: u64,
    pub out: PathBuf,
}

impl ExperimentConfig {
    /// Grid `n ∈ {4, 8, 16}`, `β ∈ {1e-4, 1e-3, 1e-2}`, 20 trials per cell.
    pub fn default_sweep(out: impl Into<PathBuf>) -> Self {
        ExperimentConfig { ns: vec![4, 8, 16], betas: vec![1e-4, 1e-3, 1e-2], trials: 20, seed: 0, out: out.into() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.ns.is_empty() || self.betas.is_empty() {
            return Err(Error::InvalidArgument("n and beta lists must be nonempty".into()));
        }
        if self.trials == 0 {
            return Err(Error::InvalidArgument("trials must be at least 1".into()));
        }
        if let Some(n) = self.ns.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidArgument(format!("n = {n} is below 2")));
        }
        if let Some(b) = self.betas.iter().find(|b| !(b.is_finite() && **b >= 0.0)) {
            return Err(Error::InvalidArgument(format!("beta = {b} is not a nonnegative number")));
        }
        Ok(())
    }
}

/// Metrics of one trial.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentRecord {
    pub n: usize,
    pub beta: f64,
    pub trial: usize,
    /// `‖H − A‖_F / ‖A‖_F`
    pub rel_dist_h_a: f64,
    /// `‖A − A*‖_F / ‖A‖_F`
    pub skewham_dev_a: f64,
    /// `‖H − H*‖_F / ‖H‖_F`
    pub skewham_dev_h: f64,
    /// `‖X^T J X‖_F / ‖X^T X‖_F` for the Krylov matrix `X` of `A`.
    pub iso_dev_x: f64,
    /// Same quantity for the isotropized basis `Y`.
    pub iso_dev_y: f64,
    /// `‖P_X − P_Y‖₂`
    pub gap: f64,
    /// Condition number of the first `n − 1` columns of `Y`.
    pub cond_xl: f64,
}

fn rel(num: f64, den: f64) -> f64 {
    if den == 0.0 {
        num
    } else {
        num / den
    }
}

fn iso_dev(x: &DenseMatrix) -> f64 {
    rel((x.transpose() * j_mul(x)).norm(), (x.transpose() * x).norm())
}

fn star_dev(a: &DenseMatrix) -> Result<f64> {
    Ok(rel((a - star_adjoint(a)?).norm(), a.norm()))
}

/// Runs one trial; `trial` in the returned record is 0.
pub fn run_trial(n: usize, beta: f64, seed: u64) -> Result<ExperimentRecord> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n = {n} is below 2")));
    }
    if !(beta.is_finite() && beta >= 0.0) {
        return Err(Error::InvalidArgument(format!("beta = {beta} is not a nonnegative number")));
    }
    let mut rng = seeded(seed);
    let onb = random_lagrangian_onb_with(n, &mut rng)?;
    let dim = 2 * n;
    let a = hhat(&onb)? + beta * gaussian_matrix(dim, dim, &mut rng);

    let mut x = DenseMatrix::zeros(dim, n);
    x.set_column(0, &onb.vector(0));
    for k in 1..n {
        let next = &a * x.column(k - 1);
        x.set_column(k, &next);
    }
    let y = isotropize(&x, Tolerance::default())?;
    let h = nearest_realizer(&y, &a)?;

    Ok(ExperimentRecord {
        n,
        beta,
        trial: 0,
        rel_dist_h_a: rel((&h - &a).norm(), a.norm()),
        skewham_dev_a: star_dev(&a)?,
        skewham_dev_h: star_dev(&h)?,
        iso_dev_x: iso_dev(&x),
        iso_dev_y: iso_dev(y.matrix()),
        gap: subspace_gap(&x, y.matrix())?.value(),
        cond_xl: condition_number(&y.left()),
    })
}

/// One sweep row; `record` is `None` for a failed trial.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub n: usize,
    pub beta: f64,
    pub trial: usize,
    pub record: Option<ExperimentRecord>,
}

impl SweepRow {
    pub fn csv_row(&self) -> String {
        let head = format!("{},{},{}", self.n, format_f64(self.beta), self.trial);
        match &self.record {
            Some(r) => {
                let vals = [
                    r.rel_dist_h_a,
                    r.skewham_dev_a,
                    r.skewham_dev_h,
                    r.iso_dev_x,
                    r.iso_dev_y,
                    r.gap,
                    r.cond_xl,
                ];
                let vals: Vec<String> = vals.iter().map(|&v| format_f64(v)).collect();
                format!("{head},{},ok", vals.join(","))
            }
            None => format!("{head},,,,,,,,fail"),
        }
    }
}

pub fn trial_seed(base: u64, n: usize, beta: f64, trial: usize) -> u64 {
    mix_seed(&[base, n as u64, beta.to_bits(), trial as u64])
}

/// Runs every `(n, β, trial)` cell in parallel; rows come back in lexicographic order.
pub fn sweep_rows(cfg: &ExperimentConfig) -> Result<Vec<SweepRow>> {
    cfg.validate()?;
    let mut ns = cfg.ns.clone();
    ns.sort_unstable();
    ns.dedup();
    let mut betas = cfg.betas.clone();
    betas.sort_by(f64::total_cmp);
    betas.dedup();

    let cells: Vec<(usize, f64, usize)> = ns
        .iter()
        .flat_map(|&n| betas.iter().flat_map(move |&b| (0..cfg.trials).map(move |t| (n, b, t))))
        .collect();
    Ok(cells
        .into_par_iter()
        .map(|(n, beta, trial)| {
            let record = match run_trial(n, beta, trial_seed(cfg.seed, n, beta, trial)) {
                Ok(r) => Some(ExperimentRecord { trial, ..r }),
                Err(e) => {
                    log::warn!("trial n={n} beta={beta} #{trial} failed: {e}");
                    None
                }
            };
            SweepRow { n, beta, trial, record }
        })
        .collect())
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

/// Opens `cfg.out` first (so an unwritable path fails before any work), then runs the
/// sweep and writes the CSV.
pub fn run_sweep(cfg: &ExperimentConfig) -> Result<Vec<SweepRow>> {
    cfg.validate()?;
    let mut file = File::create(&cfg.out)?;
    let rows = sweep_rows(cfg)?;
    file.write_all(sweep_csv(&rows).as_bytes())?;
    Ok(rows)
}

/// Aggregate over the trials of one `(n, β)` cell.
#[derive(Clone, Debug, PartialEq)]
pub struct CellSummary {
    pub n: usize,
    pub beta: f64,
    pub ok: usize,
    pub failed: usize,
    /// `NaN` if no trial succeeded.
    pub median_gap: f64,
    pub median_rel_dist: f64,
}

fn median(mut v: Vec<f64>) -> f64 {
    if v.is_empty() {
        return f64::NAN;
    }
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        0.5 * (v[m - 1] + v[m])
    }
}

/// Per-cell summaries in row order.
pub fn summarize(rows: &[SweepRow]) -> Vec<CellSummary> {
    let mut out: Vec<CellSummary> = Vec::new();
    for chunk in rows.chunk_by(|a, b| a.n == b.n && a.beta.to_bits() == b.beta.to_bits()) {
        let ok: Vec<&ExperimentRecord> = chunk.iter().filter_map(|r| r.record.as_ref()).collect();
        out.push(CellSummary {
            n: chunk[0].n,
            beta: chunk[0].beta,
            ok: ok.len(),
            failed: chunk.len() - ok.len(),
            median_gap: median(ok.iter().map(|r| r.gap).collect()),
            median_rel_dist: median(ok.iter().map(|r| r.rel_dist_h_a).collect()),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unperturbed_trial_recovers() {
        for n in [2, 4, 8] {
            let r = run_trial(n, 0.0, 11).unwrap();
            assert!(r.rel_dist_h_a <= 1e-10, "{r:?}");
            assert!(r.iso_dev_x <= 1e-10);
            assert!(r.gap <= 1e-8);
            assert!(r.skewham_dev_a <= 1e-12 && r.skewham_dev_h <= 1e-12);
        }
    }

    #[test]
    fn perturbed_trial_gap_scales_with_n_beta() {
        let r = run_trial(8, 1e-3, 5).unwrap();
        let ratio = r.gap / (8.0 * 1e-3);
        assert!((1e-2..=1e2).contains(&ratio), "{r:?}");
        assert!(r.iso_dev_y <= 1e-10);
        assert!(r.skewham_dev_h <= 1e-12);
    }

    #[test]
    fn trial_is_deterministic() {
        let a = SweepRow { n: 6, beta: 1e-3, trial: 0, record: Some(run_trial(6, 1e-3, 99).unwrap()) };
        let b = SweepRow { n: 6, beta: 1e-3, trial: 0, record: Some(run_trial(6, 1e-3, 99).unwrap()) };
        assert_eq!(a.csv_row(), b.csv_row());
    }

    #[test]
    fn invalid_inputs() {
        assert!(run_trial(1, 0.0, 0).is_err());
        assert!(run_trial(4, -1.0, 0).is_err());
        let mut cfg = ExperimentConfig::default_sweep("unused.csv");
        cfg.trials = 0;
        assert!(cfg.validate().is_err());
        cfg.trials = 1;
        cfg.betas.clear();
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn failed_row_layout() {
        let row = SweepRow { n: 4, beta: 0.5, trial: 3, record: None };
        assert_eq!(row.csv_row(), "4,5.0000000000000000e-1,3,,,,,,,,fail");
        assert_eq!(row.csv_row().split(',').count(), CSV_HEADER.split(',').count());
    }

    #[test]
    fn rows_are_ordered_and_summarized() {
        let cfg = ExperimentConfig { ns: vec![4, 2], betas: vec![1e-2, 0.0], trials: 3, seed: 1, out: "x".into() };
        let rows = sweep_rows(&cfg).unwrap();
        let keys: Vec<(usize, f64, usize)> = rows.iter().map(|r| (r.n, r.beta, r.trial)).collect();
        assert_eq!(keys[0], (2, 0.0, 0));
        assert_eq!(keys[11], (4, 1e-2, 2));
        assert!(keys.windows(2).all(|w| w[0].partial_cmp(&w[1]) == Some(std::cmp::Ordering::Less)));
        let cells = summarize(&rows);
        assert_eq!(cells.len(), 4);
        assert!(cells.iter().all(|c| c.ok + c.failed == 3));
    }

    #[test]
    fn median_even_and_odd() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), 2.5);
        assert!(median(vec![]).is_nan());
    }
}
