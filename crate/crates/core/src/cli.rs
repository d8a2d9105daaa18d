//! Command-line front end. [`dispatch`] is the whole program; `main` only wires it to
//! the process streams.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 I/O error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_complex::Complex64;

use crate::analysis::{all_passed, run_suite, SuiteConfig, VerificationReport};
use crate::error::{Error, Result};
use crate::experiment::{run_sweep, summarize, sweep_csv, sweep_rows, ExperimentConfig};
use crate::lagrangian::{is_isotropic, OrderedBasis};
use crate::matcore::{format_matrix, is_skew_hamiltonian, read_matrix, write_matrix_file, DenseMatrix, Tolerance};
use crate::realization::{
    coeffs_from_roots, hhat, hhat_with_spectrum, nearest_realizer, nearest_realizer_with_spectrum, RealizationFamily,
    SkewParam,
};

#[derive(Parser, Debug)]
#[command(name = "skewham", version, about = "Skew-Hamiltonian realizers of Lagrangian Krylov spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimum-norm realizer of a basis.
    Realize {
        basis: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Family element for a skew-symmetric (n+1)x(n+1) parameter.
    Element {
        basis: PathBuf,
        s: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Realizer whose restriction to the subspace has the given eigenvalues.
    Spectrum {
        basis: PathBuf,
        /// Comma-separated complex numbers, e.g. `1,-1,2i,-2i`.
        #[arg(allow_hyphen_values = true)]
        lambdas: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Realizer closest to a matrix in the Frobenius norm.
    Nearest {
        basis: PathBuf,
        a: PathBuf,
        /// Also constrain the restricted spectrum.
        #[arg(long, allow_hyphen_values = true)]
        spectrum: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structure report: skew-Hamiltonicity for square input, isotropy otherwise.
    Check { file: PathBuf },
    /// Perturbation sweep written as CSV.
    Experiment {
        #[arg(long, value_delimiter = ',', num_args = 1.., default_values_t = [4usize, 8, 16])]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', num_args = 1.., default_values_t = [1e-4, 1e-3, 1e-2])]
        beta: Vec<f64>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV destination; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite (or `all`).
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, value_delimiter = ',', num_args = 1.., default_values_t = [1usize, 2, 3, 4, 8])]
        n: Vec<usize>,
        /// Random bases per n.
        #[arg(long, default_value_t = 3)]
        bases: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit CSV instead of readable lines.
        #[arg(long)]
        csv: bool,
    },
}

/// Parses a comma-separated list of complex numbers.
pub fn parse_lambdas(s: &str) -> Result<Vec<Complex64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| Complex64::from_str(t).map_err(|_| Error::InvalidArgument(format!("not a complex number: {t:?}"))))
        .collect()
}

fn load_basis(path: &Path) -> Result<OrderedBasis> {
    OrderedBasis::new(read_matrix(path)?)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, m: &DenseMatrix) -> Result<()> {
    match path {
        Some(p) => write_matrix_file(p, m),
        None => Ok(out.write_all(format_matrix(m).as_bytes())?),
    }
}

fn print_reports(out: &mut dyn Write, reports: &[VerificationReport], csv: bool) -> Result<()> {
    if csv {
        writeln!(out, "{}", VerificationReport::CSV_HEADER)?;
        for r in reports {
            writeln!(out, "{}", r.csv_row())?;
        }
    } else {
        for r in reports {
            writeln!(out, "{r}")?;
        }
        let failed = reports.iter().filter(|r| !r.passed).count();
        writeln!(out, "{} checks, {} failed", reports.len(), failed)?;
    }
    Ok(())
}

fn check(out: &mut dyn Write, path: &Path) -> Result<()> {
    let m = read_matrix(path)?;
    let tol = Tolerance::default();
    let (label, c) = if m.is_square() {
        ("skew-Hamiltonian", is_skew_hamiltonian(&m, tol)?)
    } else {
        ("isotropic", is_isotropic(&m, tol)?)
    };
    let verdict = if c.passed { "yes" } else { "no" };
    writeln!(out, "{label}: {verdict} (defect {:.3e}, threshold {:.3e})", c.defect, c.threshold)?;
    Ok(())
}

/// Runs a command; `Ok(false)` means it completed but reported failures.
fn run(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool> {
    match cmd {
        Command::Realize { basis, out: dest } => {
            let b = load_basis(&basis)?;
            emit(out, dest.as_deref(), &hhat(&b)?)?;
        }
        Command::Element { basis, s, out: dest } => {
            let fam = RealizationFamily::new(load_basis(&basis)?)?;
            let param = SkewParam::from_matrix(&read_matrix(&s)?, Tolerance::default())?;
            emit(out, dest.as_deref(), &fam.element(&param)?)?;
        }
        Command::Spectrum { basis, lambdas, out: dest } => {
            let b = load_basis(&basis)?;
            let spec = coeffs_from_roots(&parse_lambdas(&lambdas)?)?;
            emit(out, dest.as_deref(), &hhat_with_spectrum(&b, &spec)?)?;
        }
        Command::Nearest { basis, a, spectrum, out: dest } => {
            let b = load_basis(&basis)?;
            let a = read_matrix(&a)?;
            let h = match spectrum {
                Some(l) => nearest_realizer_with_spectrum(&b, &coeffs_from_roots(&parse_lambdas(&l)?)?, &a)?,
                None => nearest_realizer(&b, &a)?,
            };
            emit(out, dest.as_deref(), &h)?;
        }
        Command::Check { file } => check(out, &file)?,
        Command::Experiment { n, beta, trials, seed, out: dest } => {
            let to_stdout = dest.is_none();
            let cfg = ExperimentConfig { ns: n, betas: beta, trials, seed, out: dest.unwrap_or_default() };
            let rows = if to_stdout {
                let rows = sweep_rows(&cfg)?;
                out.write_all(sweep_csv(&rows).as_bytes())?;
                rows
            } else {
                run_sweep(&cfg)?
            };
            for c in summarize(&rows) {
                writeln!(
                    err,
                    "n={} beta={:e}: {} ok, {} failed, median gap {:.3e}, median rel dist {:.3e}",
                    c.n, c.beta, c.ok, c.failed, c.median_gap, c.median_rel_dist
                )?;
            }
        }
        Command::Verify { suite, n, bases, trials, seed, csv } => {
            let reports = run_suite(&suite, &SuiteConfig { ns: n, bases, trials, seed })?;
            print_reports(out, &reports, csv)?;
            return Ok(all_passed(&reports));
        }
    }
    Ok(true)
}

/// Parses `args` (program name first) and runs the command.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                1
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    match run(cli.command, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Io(_) => 2,
                _ => 1,
            }
        }
    }
}
