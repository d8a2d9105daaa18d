//! Executable checks of the structural results about `HK(B)`.
//!
//! Each verifier returns one [`VerificationReport`] per assertion it makes. Sampled
//! checks compare the claimed optimum against random members of the family; the
//! reported defect is the worst violation seen.

use std::fmt;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::lagrangian::{random_lagrangian_basis, random_lagrangian_onb_with, OrderedBasis};
use crate::matcore::{
    self, format_f64, j_mul, numerical_rank, orthonormal_range, pinv, spectral_norm, star_adjoint, DenseMatrix,
    Tolerance,
};
use crate::realization::{
    coeffs_from_roots, hhat, k_factor, membership, restricted_spectrum, spectrum_distance, RealizationFamily,
    SkewParam, SpectrumFamily, SpectrumSpec,
};
use crate::sampling::{gaussian_matrix, seeded};

/// One verified assertion.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub name: String,
    pub n: usize,
    pub seed: u64,
    pub defect: f64,
    pub threshold: f64,
    pub passed: bool,
    pub trials: usize,
}

impl VerificationReport {
    pub const CSV_HEADER: &'static str = "name,n,seed,defect,threshold,passed,trials";

    pub fn new(name: &str, n: usize, seed: u64, defect: f64, threshold: f64, trials: usize) -> Self {
        VerificationReport {
            name: name.to_string(),
            n,
            seed,
            defect,
            threshold,
            passed: defect <= threshold,
            trials,
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.name,
            self.n,
            self.seed,
            format_f64(self.defect),
            format_f64(self.threshold),
            self.passed,
            self.trials
        )
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} (n={}, seed={}, trials={}): defect {:.3e} <= {:.3e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.n,
            self.seed,
            self.trials,
            self.defect,
            self.threshold
        )
    }
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

/// Orthonormality tolerance for the checks that need an orthonormal basis.
const ORTHONORMAL_TOL: f64 = 1e-10;

/// `X_L^T J Ĥ X_L^⊥`-style stationarity: `‖(X_L^⊥)^T J Ĥ X_L^⊥‖_F`.
pub fn stationarity_defect(fam: &RealizationFamily) -> f64 {
    let c = fam.complement();
    (c.transpose() * j_mul(fam.hhat()) * c).norm()
}

/// Frobenius minimality of `Ĥ` over `trials` random family members with parameters
/// drawn as `scale · N(0, 1)`.
pub fn verify_frobenius_min_scaled(basis: &OrderedBasis, trials: usize, seed: u64, scale: f64) -> Result<Vec<VerificationReport>> {
    let fam = RealizationFamily::new(basis.clone())?;
    let n = basis.n();
    let hnorm = fam.hhat().norm();
    let mut rng = seeded(seed);
    let mut dominance: f64 = 0.0;
    let mut pythagoras: f64 = 0.0;
    for _ in 0..trials {
        let s = SkewParam::random(fam.param_dim(), &mut rng).scaled(scale);
        let corr = fam.correction(&s)?;
        let h = fam.hhat() + &corr;
        let total = h.norm_squared();
        dominance = dominance.max(hnorm - h.norm());
        if total > 0.0 {
            let split = fam.hhat().norm_squared() + corr.norm_squared();
            pythagoras = pythagoras.max((total - split).abs() / total);
        }
    }
    Ok(vec![
        VerificationReport::new("frobenius_min.dominance", n, seed, dominance.max(0.0), 1e-12 * hnorm, trials),
        VerificationReport::new("frobenius_min.pythagorean", n, seed, pythagoras, 1e-10, trials),
        VerificationReport::new("frobenius_min.stationarity", n, seed, stationarity_defect(&fam), 1e-12 * hnorm, 1),
    ])
}

pub fn verify_frobenius_min(basis: &OrderedBasis, trials: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    verify_frobenius_min_scaled(basis, trials, seed, 1.0)
}

/// Spectral-norm minimality of `Ĥ`; for orthonormal bases also `‖Ĥ‖₂ = 1` (`n ≥ 2`).
pub fn verify_spectral_min(basis: &OrderedBasis, trials: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    let fam = RealizationFamily::new(basis.clone())?;
    let n = basis.n();
    let hnorm = spectral_norm(fam.hhat());
    let mut rng = seeded(seed);
    let mut dominance: f64 = 0.0;
    for _ in 0..trials {
        let h = fam.random_element(&mut rng);
        dominance = dominance.max(hnorm - spectral_norm(&h));
    }
    let mut out = vec![VerificationReport::new(
        "spectral_min.dominance",
        n,
        seed,
        dominance.max(0.0),
        1e-10 * hnorm,
        trials,
    )];
    if n == 1 {
        out.push(VerificationReport::new("spectral_min.zero", n, seed, hnorm, 0.0, 1));
    } else if basis.orthonormality_defect() <= ORTHONORMAL_TOL {
        out.push(VerificationReport::new("spectral_min.unit_norm", n, seed, (hnorm - 1.0).abs(), 1e-10, 1));
    }
    Ok(out)
}

/// Smallest `k ≤ dim` with `‖H^k‖_F ≤ tol.rel·max(1, ‖H‖₂)^k`; `None` if no such `k`.
pub fn nilpotency_index(h: &DenseMatrix, tol: Tolerance) -> Option<usize> {
    assert!(h.is_square(), "nilpotency_index needs a square matrix");
    let scale = spectral_norm(h).max(1.0);
    let mut power = h.clone();
    let mut bound = scale;
    for k in 1..=h.nrows() {
        if power.norm() <= tol.rel * bound {
            return Some(k);
        }
        power = &power * h;
        bound *= scale;
    }
    None
}

/// `Ĥ` of an orthonormal basis has nilpotency index exactly `n`.
pub fn verify_nilpotency(basis: &OrderedBasis) -> Result<Vec<VerificationReport>> {
    let n = basis.n();
    let h = hhat(basis)?;
    let defect = match nilpotency_index(&h, Tolerance::default()) {
        Some(k) => (k as f64 - n as f64).abs(),
        None => f64::INFINITY,
    };
    Ok(vec![VerificationReport::new("nilpotency.index", n, 0, defect, 0.0, 1)])
}

/// `K K* = K* K = 0`, relative to `‖K‖_F²`.
pub fn verify_j_normality(basis: &OrderedBasis) -> Result<Vec<VerificationReport>> {
    let n = basis.n();
    let k = k_factor(basis)?;
    let ks = star_adjoint(&k)?;
    let thr = 1e-12 * k.norm_squared();
    Ok(vec![
        VerificationReport::new("j_normal.k_kstar", n, 0, (&k * &ks).norm(), thr, 1),
        VerificationReport::new("j_normal.kstar_k", n, 0, (&ks * &k).norm(), thr, 1),
    ])
}

/// `Ĥ ∈ HK(B)`: relative Krylov residual and exact skew-Hamiltonian structure.
pub fn verify_membership(basis: &OrderedBasis) -> Result<Vec<VerificationReport>> {
    let n = basis.n();
    let h = hhat(basis)?;
    let m = membership(&h, basis, Tolerance::default());
    Ok(vec![
        VerificationReport::new("membership.residual", n, 0, m.residual, 1e-10, 1),
        VerificationReport::new("membership.skew_hamiltonian", n, 0, m.skew_defect, 1e-12 * h.norm(), 1),
    ])
}

/// Both directions of the dimension count: the `n(n+1)/2` generators are independent,
/// and a random skew-Hamiltonian `D` vanishing on `x_1, …, x_{n-1}`, built from the
/// projector `I − X_L X_L^+` rather than from the family's complement, lies in their span.
pub fn verify_dimension(basis: &OrderedBasis, seed: u64) -> Result<Vec<VerificationReport>> {
    let fam = RealizationFamily::new(basis.clone())?;
    let n = basis.n();
    let dim = 2 * n;
    let gens = fam.generators();
    let mut g = DenseMatrix::zeros(dim * dim, gens.len());
    for (j, m) in gens.iter().enumerate() {
        g.column_mut(j).copy_from_slice(m.as_slice());
    }
    let rank = numerical_rank(&g);
    let expected = n * (n + 1) / 2;

    let xl = basis.left();
    let proj = DenseMatrix::identity(dim, dim) - &xl * pinv(&xl);
    let r = gaussian_matrix(dim, dim, &mut seeded(seed));
    let skew = &proj * (&r - r.transpose()) * &proj;
    let d = matcore::jt_mul(&skew);
    let dvec = DenseMatrix::from_column_slice(dim * dim, 1, d.as_slice());
    let coef = pinv(&g) * &dvec;
    let residual = (&g * coef - &dvec).norm() / d.norm();

    Ok(vec![
        VerificationReport::new("dimension.rank", n, seed, (rank as f64 - expected as f64).abs(), 0.0, 1),
        VerificationReport::new("dimension.span", n, seed, residual, 1e-10, 1),
    ])
}

/// For orthonormal bases, `Ĥ^T Ĥ = X_L X_L^T + J^T X_R X_R^T J` and it is a projector.
pub fn verify_projection_identity(basis: &OrderedBasis) -> Result<Vec<VerificationReport>> {
    let defect = basis.orthonormality_defect();
    if defect > ORTHONORMAL_TOL {
        return Err(Error::OrthonormalityViolation { defect });
    }
    let n = basis.n();
    let h = hhat(basis)?;
    let hth = h.transpose() * &h;
    let xl = basis.left();
    let xr = basis.right();
    let rhs = &xl * xl.transpose() + matcore::jt_mul(&matcore::mul_j(&(&xr * xr.transpose())));
    Ok(vec![
        VerificationReport::new("projection.identity", n, 0, (&hth - rhs).norm(), 1e-12 * h.norm_squared(), 1),
        VerificationReport::new("projection.idempotent", n, 0, (&hth * &hth - &hth).norm(), 1e-12, 1),
    ])
}

/// `‖Ĥ‖₂ = ‖K‖₂`, and `‖K‖₂` is attained on `range(X_L)`.
pub fn verify_norm_equality(basis: &OrderedBasis) -> Result<Vec<VerificationReport>> {
    let n = basis.n();
    let h = hhat(basis)?;
    let k = k_factor(basis)?;
    let knorm = spectral_norm(&k);
    let on_range = spectral_norm(&(&k * orthonormal_range(&basis.left())));
    Ok(vec![
        VerificationReport::new("norm_equality.hhat_k", n, 0, (spectral_norm(&h) - knorm).abs(), 1e-10 * knorm, 1),
        VerificationReport::new("norm_equality.max_range", n, 0, (on_range - knorm).abs(), 1e-10 * knorm, 1),
    ])
}

/// Restricted spectrum of `H̃` and of `trials` random members of its family matches `spec`.
pub fn verify_prescribed_spectrum(
    basis: &OrderedBasis,
    spec: &SpectrumSpec,
    trials: usize,
    seed: u64,
) -> Result<Vec<VerificationReport>> {
    let n = basis.n();
    let fam = SpectrumFamily::new(basis.clone(), spec)?;
    let max_mod = spec.values().iter().map(|z| z.norm()).fold(0.0, f64::max);
    let thr = 1e-8 * (1.0 + max_mod);
    let base = spectrum_distance(&restricted_spectrum(fam.htilde(), basis)?, spec.values());
    let mut rng = seeded(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let h = fam.element(&SkewParam::random(fam.param_dim(), &mut rng))?;
        worst = worst.max(spectrum_distance(&restricted_spectrum(&h, basis)?, spec.values()));
    }
    Ok(vec![
        VerificationReport::new("spectrum.htilde", n, seed, base, thr, 1),
        VerificationReport::new("spectrum.family_invariance", n, seed, worst, thr, trials),
    ])
}

/// Worst `(‖H − A‖ − ‖H' − A‖)⁺ / ‖H − A‖` over sampled family members `H'`.
fn nearest_dominance<R: Rng + ?Sized>(
    best: &DenseMatrix,
    a: &DenseMatrix,
    trials: usize,
    rng: &mut R,
    mut draw: impl FnMut(&mut R) -> DenseMatrix,
) -> f64 {
    let dist = (best - a).norm();
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let other = draw(rng);
        worst = worst.max(dist - (&other - a).norm());
    }
    worst.max(0.0) / dist.max(f64::MIN_POSITIVE)
}

/// Nearest realizer battery: recovery of family members, `A = 0`, sampled dominance.
pub fn verify_nearest(basis: &OrderedBasis, trials: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    let n = basis.n();
    let fam = RealizationFamily::new(basis.clone())?;
    let dim = 2 * n;
    let mut rng = seeded(seed);

    let member = fam.random_element(&mut rng);
    let recovery = (fam.nearest(&member)? - &member).norm() / member.norm();

    let zero = fam.nearest(&DenseMatrix::zeros(dim, dim))?;
    let zero_defect = (&zero - fam.hhat()).norm();

    let a = gaussian_matrix(dim, dim, &mut rng);
    let best = fam.nearest(&a)?;
    let dominance = nearest_dominance(&best, &a, trials, &mut rng, |r| fam.random_element(r));

    Ok(vec![
        VerificationReport::new("nearest.recovery", n, seed, recovery, 1e-10, 1),
        VerificationReport::new("nearest.zero_target", n, seed, zero_defect, 1e-12 * fam.hhat().norm(), 1),
        VerificationReport::new("nearest.dominance", n, seed, dominance, 1e-12, trials),
    ])
}

/// The same battery for the spectrum-constrained family, plus the spectrum of the result.
pub fn verify_nearest_with_spectrum(
    basis: &OrderedBasis,
    spec: &SpectrumSpec,
    trials: usize,
    seed: u64,
) -> Result<Vec<VerificationReport>> {
    let n = basis.n();
    let fam = SpectrumFamily::new(basis.clone(), spec)?;
    let dim = 2 * n;
    let mut rng = seeded(seed);
    let draw = |r: &mut _| fam.element(&SkewParam::random(fam.param_dim(), r)).expect("dimension matches");

    let member = draw(&mut rng);
    let recovery = (fam.nearest(&member)? - &member).norm() / member.norm();

    let zero = fam.nearest(&DenseMatrix::zeros(dim, dim))?;
    let zero_dominance = nearest_dominance(&zero, &DenseMatrix::zeros(dim, dim), trials, &mut rng, draw);

    let a = gaussian_matrix(dim, dim, &mut rng);
    let best = fam.nearest(&a)?;
    let dominance = nearest_dominance(&best, &a, trials, &mut rng, draw);

    let max_mod = spec.values().iter().map(|z| z.norm()).fold(0.0, f64::max);
    let spectrum = spectrum_distance(&restricted_spectrum(&best, basis)?, spec.values());

    Ok(vec![
        VerificationReport::new("nearest_spectrum.recovery", n, seed, recovery, 1e-10, 1),
        VerificationReport::new("nearest_spectrum.zero_target", n, seed, zero_dominance, 1e-12, trials),
        VerificationReport::new("nearest_spectrum.dominance", n, seed, dominance, 1e-12, trials),
        VerificationReport::new("nearest_spectrum.restricted", n, seed, spectrum, 1e-8 * (1.0 + max_mod), 1),
    ])
}

/// Random conjugation-closed spectrum of size `n` with values in `[-1.2, 1.2]²` and
/// pairwise separation at least `0.3` (conjugates included).
pub fn random_separated_spectrum<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SpectrumSpec {
    const SEP: f64 = 0.3;
    const BOX: f64 = 1.2;
    'outer: loop {
        let mut vals: Vec<Complex64> = Vec::with_capacity(n);
        let pairs = rng.random_range(0..=n / 2);
        let mut attempts = 0;
        while vals.len() < n {
            attempts += 1;
            if attempts > 10_000 {
                continue 'outer;
            }
            let re = rng.random_range(-BOX..BOX);
            let cand: Vec<Complex64> = if vals.len() < 2 * pairs {
                let im = rng.random_range(SEP..BOX);
                vec![Complex64::new(re, im), Complex64::new(re, -im)]
            } else {
                vec![Complex64::new(re, 0.0)]
            };
            if cand.iter().all(|c| vals.iter().all(|v| (v - c).norm() >= SEP)) {
                vals.extend(cand);
            }
        }
        return coeffs_from_roots(&vals).expect("constructed conjugation-closed");
    }
}

/// Names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "membership",
    "dimension",
    "frobenius",
    "spectral",
    "nilpotency",
    "j-normal",
    "projection",
    "norm-equality",
    "spectrum",
    "nearest",
    "nearest-spectrum",
];

/// Settings for a batch run of one suite.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub ns: Vec<usize>,
    /// Random bases per `n`.
    pub bases: usize,
    /// Sampled family members per basis, for sampling checks.
    pub trials: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { ns: vec![1, 2, 3, 4, 8], bases: 3, trials: 200, seed: 0 }
    }
}

/// Upper bound on `cond(X)` for the non-orthonormal random bases used by the suites.
pub const GENERAL_BASIS_COND: f64 = 10.0;

/// Runs one named suite (or `"all"`) over random orthonormal and general bases.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    if name == "all" {
        let mut out = Vec::new();
        for s in SUITES {
            out.extend(run_suite(s, cfg)?);
        }
        return Ok(out);
    }
    if !SUITES.contains(&name) {
        return Err(Error::InvalidArgument(format!(
            "unknown suite {name:?}; expected one of {} or all",
            SUITES.join(", ")
        )));
    }
    let mut out = Vec::new();
    for &n in &cfg.ns {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        for b in 0..cfg.bases {
            let seed = crate::sampling::mix_seed(&[cfg.seed, n as u64, b as u64]);
            let mut rng = seeded(seed);
            let onb = random_lagrangian_onb_with(n, &mut rng)?;
            let general = random_lagrangian_basis(n, GENERAL_BASIS_COND, &mut rng)?;
            let reports = match name {
                "membership" => [verify_membership(&onb)?, verify_membership(&general)?].concat(),
                "dimension" => verify_dimension(&general, seed)?,
                "frobenius" => verify_frobenius_min(&general, cfg.trials, seed)?,
                "spectral" => [
                    verify_spectral_min(&onb, cfg.trials, seed)?,
                    verify_spectral_min(&general, cfg.trials, seed)?,
                ]
                .concat(),
                "nilpotency" if n >= 2 => verify_nilpotency(&onb)?,
                "nilpotency" => Vec::new(),
                "j-normal" => [verify_j_normality(&onb)?, verify_j_normality(&general)?].concat(),
                "projection" => verify_projection_identity(&onb)?,
                "norm-equality" => [verify_norm_equality(&onb)?, verify_norm_equality(&general)?].concat(),
                "spectrum" => {
                    let spec = random_separated_spectrum(n, &mut rng);
                    verify_prescribed_spectrum(&general, &spec, cfg.trials, seed)?
                }
                "nearest" => verify_nearest(&general, cfg.trials, seed)?,
                "nearest-spectrum" => {
                    let spec = random_separated_spectrum(n, &mut rng);
                    verify_nearest_with_spectrum(&general, &spec, cfg.trials, seed)?
                }
                _ => unreachable!("suite names checked above"),
            };
            out.extend(reports);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lagrangian::random_lagrangian_onb;
    use crate::matcore::Vector;

    fn e(dim: usize, i: usize) -> Vector {
        let mut v = Vector::zeros(dim);
        v[i] = 1.0;
        v
    }

    fn assert_all(reports: &[VerificationReport]) {
        for r in reports {
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn report_csv_row() {
        let r = VerificationReport::new("x.y", 3, 7, 0.5, 1.0, 10);
        assert!(r.passed);
        assert_eq!(r.csv_row(), "x.y,3,7,5.0000000000000000e-1,1.0000000000000000e0,true,10");
        assert!(!VerificationReport::new("nan", 1, 0, f64::NAN, 1.0, 1).passed);
    }

    #[test]
    fn nilpotency_examples() {
        let tol = Tolerance::default();
        assert_eq!(nilpotency_index(&DenseMatrix::zeros(4, 4), tol), Some(1));
        let b = OrderedBasis::from_vectors(&[e(4, 0), e(4, 1)]).unwrap();
        assert_eq!(nilpotency_index(&hhat(&b).unwrap(), tol), Some(2));
        assert_eq!(nilpotency_index(&DenseMatrix::identity(4, 4), tol), None);
    }

    #[test]
    fn nilpotency_index_is_exactly_n() {
        for n in 2..=12 {
            let b = random_lagrangian_onb(n, 40 + n as u64).unwrap();
            assert_eq!(nilpotency_index(&hhat(&b).unwrap(), Tolerance::default()), Some(n));
        }
    }

    #[test]
    fn frobenius_min_scaled_draws() {
        let mut rng = seeded(1);
        let b = random_lagrangian_basis(6, GENERAL_BASIS_COND, &mut rng).unwrap();
        assert_all(&verify_frobenius_min(&b, 1000, 2).unwrap());
        assert_all(&verify_frobenius_min_scaled(&b, 200, 3, 1e6).unwrap());
        assert_all(&verify_frobenius_min_scaled(&b, 1, 3, 0.0).unwrap());
    }

    #[test]
    fn spectral_min_cases() {
        let onb = random_lagrangian_onb(6, 5).unwrap();
        let r = verify_spectral_min(&onb, 1000, 6).unwrap();
        assert!(r.iter().any(|r| r.name == "spectral_min.unit_norm"));
        assert_all(&r);

        let single = random_lagrangian_onb(1, 5).unwrap();
        let r = verify_spectral_min(&single, 50, 6).unwrap();
        assert!(r.iter().any(|r| r.name == "spectral_min.zero"));
        assert_all(&r);
    }

    #[test]
    fn dimension_counts() {
        for (n, rank) in [(2, 3), (4, 10), (8, 36)] {
            let b = random_lagrangian_basis(n, GENERAL_BASIS_COND, &mut seeded(n as u64)).unwrap();
            let r = verify_dimension(&b, 9).unwrap();
            assert_all(&r);
            assert_eq!(RealizationFamily::new(b).unwrap().generators().len(), rank);
        }
    }

    #[test]
    fn projection_identity_cases() {
        let b = OrderedBasis::from_vectors(&[e(4, 0), e(4, 1)]).unwrap();
        let h = hhat(&b).unwrap();
        let diag = DenseMatrix::from_diagonal(&Vector::from_vec(vec![1.0, 0.0, 0.0, 1.0]));
        assert!((h.transpose() * &h - diag).amax() < 1e-15);
        assert_all(&verify_projection_identity(&b).unwrap());
        assert_all(&verify_projection_identity(&random_lagrangian_onb(8, 2).unwrap()).unwrap());

        let scaled = OrderedBasis::from_vectors(&[e(4, 0), 2.0 * e(4, 1)]).unwrap();
        assert!(matches!(verify_projection_identity(&scaled), Err(Error::OrthonormalityViolation { .. })));
    }

    #[test]
    fn norm_equality_cases() {
        let onb = random_lagrangian_onb(5, 8).unwrap();
        assert_all(&verify_norm_equality(&onb).unwrap());
        assert!((spectral_norm(&k_factor(&onb).unwrap()) - 1.0).abs() < 1e-12);

        let mut x = onb.matrix().clone();
        x.column_mut(1).scale_mut(2.0);
        assert_all(&verify_norm_equality(&OrderedBasis::new(x).unwrap()).unwrap());

        let single = random_lagrangian_onb(1, 8).unwrap();
        let r = verify_norm_equality(&single).unwrap();
        assert_all(&r);
        assert_eq!(r[0].defect, 0.0);
    }

    #[test]
    fn separated_spectra_are_valid() {
        let mut rng = seeded(12);
        for n in 1..=12 {
            let spec = random_separated_spectrum(n, &mut rng);
            assert_eq!(spec.len(), n);
            let v = spec.values();
            for i in 0..n {
                for j in 0..i {
                    assert!((v[i] - v[j]).norm() >= 0.3);
                }
            }
        }
    }

    #[test]
    fn every_suite_runs_small() {
        let cfg = SuiteConfig { ns: vec![1, 2, 3], bases: 2, trials: 20, seed: 4 };
        let reports = run_suite("all", &cfg).unwrap();
        assert!(!reports.is_empty());
        assert_all(&reports);
        assert!(run_suite("bogus", &cfg).is_err());
    }
}
