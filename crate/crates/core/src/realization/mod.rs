//! Skew-Hamiltonian matrices that realize a Lagrangian subspace as a Krylov space.
//!
//! For an ordered basis `B = (x_1, …, x_n)` of a Lagrangian subspace, `HK(B)` is the
//! set of skew-Hamiltonian `H` with `H x_k = x_{k+1}` for `k < n`. It is the affine
//! space
//!
//! ```text
//! HK(B) = { Ĥ + J^T X_L^⊥ S (X_L^⊥)^T : S = −S^T ∈ ℝ^{(n+1)×(n+1)} },   Ĥ = K + K*,  K = X_R X_L^+
//! ```
//!
//! of dimension `n(n+1)/2`, and `Ĥ` is its element of least Frobenius and spectral norm.

mod spectrum;

pub use self::spectrum::{
    coeffs_from_roots, companion, hhat_with_spectrum, nearest_realizer_with_spectrum, restricted_spectrum,
    spectrum_distance, spectrum_family_element, SpectrumFamily, SpectrumSpec,
};

use log::warn;
use rand::Rng;

use crate::error::{Error, Result};
use crate::lagrangian::OrderedBasis;
use crate::matcore::{
    self, condition_number, is_skew_hamiltonian, jt_mul, orthonormal_complement, pinv, skew_part, star_adjoint,
    DenseMatrix, Tolerance,
};
use crate::sampling::gaussian_matrix;

/// Above this condition number of `X_L` the realizer residuals degrade noticeably.
pub const CONDITION_WARN: f64 = 1e8;

/// Skew-symmetric parameter `S` selecting one element of an affine family.
///
/// Only the strictly lower triangle is free; the upper triangle is its negated mirror,
/// so `S^T = −S` holds exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewParam {
    s: DenseMatrix,
}

impl SkewParam {
    pub fn zeros(dim: usize) -> Self {
        SkewParam { s: DenseMatrix::zeros(dim, dim) }
    }

    /// Builds `S` from a generator of the strictly lower entries `(i, j)`, `i > j`.
    pub fn from_lower(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut s = DenseMatrix::zeros(dim, dim);
        for j in 0..dim {
            for i in j + 1..dim {
                let v = f(i, j);
                s[(i, j)] = v;
                s[(j, i)] = -v;
            }
        }
        SkewParam { s }
    }

    /// Accepts a stored matrix when `‖M + M^T‖_F ≤ tol` relative to `‖M‖_F`.
    pub fn from_matrix(m: &DenseMatrix, tol: Tolerance) -> Result<Self> {
        if !m.is_square() || m.is_empty() {
            return Err(Error::dim(format!("skew parameter must be square, got {}x{}", m.nrows(), m.ncols())));
        }
        let defect = (m + m.transpose()).norm();
        if defect > tol.threshold(m.norm()) {
            return Err(Error::NotSkewSymmetric { defect });
        }
        Ok(Self::from_lower(m.nrows(), |i, j| m[(i, j)]))
    }

    /// Independent standard normal lower entries.
    pub fn random<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Self {
        let g = gaussian_matrix(dim, dim, rng);
        Self::from_lower(dim, |i, j| g[(i, j)])
    }

    /// `E_ij − E_ji` for `i > j`.
    pub fn elementary(dim: usize, i: usize, j: usize) -> Self {
        assert!(i > j && i < dim);
        Self::from_lower(dim, |a, b| if (a, b) == (i, j) { 1.0 } else { 0.0 })
    }

    pub fn dim(&self) -> usize {
        self.s.nrows()
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.s
    }

    pub fn scaled(&self, factor: f64) -> Self {
        SkewParam { s: &self.s * factor }
    }
}

/// `J^T Q S Q^T` for orthonormal `Q`, with the middle factor made exactly skew-symmetric
/// so the result is exactly skew-Hamiltonian.
pub(crate) fn structured_correction(q: &DenseMatrix, s: &SkewParam) -> Result<DenseMatrix> {
    if s.dim() != q.ncols() {
        return Err(Error::dim(format!("skew parameter has dimension {}, expected {}", s.dim(), q.ncols())));
    }
    let middle = skew_part(&(q * s.matrix() * q.transpose()));
    Ok(jt_mul(&middle))
}

/// `−½ [Q^T J D Q + Q^T D^T J Q]` with `D = base − A`: the skew parameter minimizing
/// `‖base + J^T Q S Q^T − A‖_F`.
pub(crate) fn nearest_param(q: &DenseMatrix, base: &DenseMatrix, a: &DenseMatrix) -> Result<SkewParam> {
    if a.shape() != base.shape() {
        return Err(Error::dim(format!(
            "target matrix is {}x{}, expected {}x{}",
            a.nrows(),
            a.ncols(),
            base.nrows(),
            base.ncols()
        )));
    }
    let d = base - a;
    let t1 = q.transpose() * matcore::j_mul(&d) * q;
    let t2 = q.transpose() * matcore::mul_j(&d.transpose()) * q;
    let s = (t1 + t2) * -0.5;
    Ok(SkewParam::from_lower(s.nrows(), |i, j| 0.5 * (s[(i, j)] - s[(j, i)])))
}

pub(crate) fn require_isotropic(basis: &OrderedBasis) -> Result<()> {
    let check = basis.isotropy(Tolerance::default());
    if !check.passed {
        return Err(Error::IsotropyViolation { defect: check.defect, threshold: check.threshold });
    }
    Ok(())
}

pub(crate) fn require_full(basis: &OrderedBasis) -> Result<()> {
    if !basis.is_full() {
        return Err(Error::dim(format!(
            "need a Lagrangian basis of {} vectors, got {}",
            basis.n(),
            basis.len()
        )));
    }
    Ok(())
}

fn warn_if_ill_conditioned(basis: &OrderedBasis) {
    if basis.len() > 1 {
        let cond = condition_number(&basis.left());
        if cond > CONDITION_WARN {
            warn!("X_L has condition number {cond:.3e}; realizer residuals may be inaccurate");
        }
    }
}

fn k_unchecked(basis: &OrderedBasis) -> DenseMatrix {
    let dim = 2 * basis.n();
    if basis.len() == 1 {
        return DenseMatrix::zeros(dim, dim);
    }
    basis.right() * pinv(&basis.left())
}

/// `K = X_R X_L^+`, the shift part of `Ĥ`. Zero for a single vector.
pub fn k_factor(basis: &OrderedBasis) -> Result<DenseMatrix> {
    require_isotropic(basis)?;
    Ok(k_unchecked(basis))
}

/// The minimum-norm realizer `Ĥ = K + K*`.
pub fn hhat(basis: &OrderedBasis) -> Result<DenseMatrix> {
    require_isotropic(basis)?;
    warn_if_ill_conditioned(basis);
    let k = k_unchecked(basis);
    Ok(&k + star_adjoint(&k)?)
}

/// The affine family `HK(B)` in the parametrization `Ĥ + J^T X_L^⊥ S (X_L^⊥)^T`.
#[derive(Clone, Debug)]
pub struct RealizationFamily {
    basis: OrderedBasis,
    hhat: DenseMatrix,
    complement: DenseMatrix,
    dim: usize,
}

impl RealizationFamily {
    pub fn new(basis: OrderedBasis) -> Result<Self> {
        require_full(&basis)?;
        let hhat = hhat(&basis)?;
        let complement = orthonormal_complement(&basis.left());
        let n = basis.n();
        if complement.ncols() != n + 1 {
            return Err(Error::RankDeficient { rank: 2 * n - complement.ncols(), expected: n - 1 });
        }
        Ok(RealizationFamily { basis, hhat, complement, dim: n * (n + 1) / 2 })
    }

    pub fn basis(&self) -> &OrderedBasis {
        &self.basis
    }

    pub fn hhat(&self) -> &DenseMatrix {
        &self.hhat
    }

    /// Orthonormal basis `X_L^⊥` of `span{x_1, …, x_{n-1}}^⊥` (`n + 1` columns).
    pub fn complement(&self) -> &DenseMatrix {
        &self.complement
    }

    /// `n(n+1)/2`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Size of the skew parameter, `n + 1`.
    pub fn param_dim(&self) -> usize {
        self.complement.ncols()
    }

    /// `J^T X_L^⊥ S (X_L^⊥)^T`.
    pub fn correction(&self, s: &SkewParam) -> Result<DenseMatrix> {
        structured_correction(&self.complement, s)
    }

    pub fn element(&self, s: &SkewParam) -> Result<DenseMatrix> {
        Ok(&self.hhat + self.correction(s)?)
    }

    /// The images of the elementary skew matrices; they span the direction space of the family.
    pub fn generators(&self) -> Vec<DenseMatrix> {
        let d = self.param_dim();
        let mut out = Vec::with_capacity(self.dim);
        for j in 0..d {
            for i in j + 1..d {
                out.push(self.correction(&SkewParam::elementary(d, i, j)).expect("dimension matches"));
            }
        }
        out
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> DenseMatrix {
        self.element(&SkewParam::random(self.param_dim(), rng)).expect("dimension matches")
    }

    /// Skew parameter of the family element nearest to `a` in the Frobenius norm.
    pub fn nearest_param(&self, a: &DenseMatrix) -> Result<SkewParam> {
        nearest_param(&self.complement, &self.hhat, a)
    }

    pub fn nearest(&self, a: &DenseMatrix) -> Result<DenseMatrix> {
        self.element(&self.nearest_param(a)?)
    }
}

pub fn family(basis: &OrderedBasis) -> Result<RealizationFamily> {
    RealizationFamily::new(basis.clone())
}

pub fn element(fam: &RealizationFamily, s: &SkewParam) -> Result<DenseMatrix> {
    fam.element(s)
}

/// Result of [`membership`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Membership {
    pub skew_defect: f64,
    pub skew_threshold: f64,
    /// `max_k ‖H x_k − x_{k+1}‖ / ‖x_{k+1}‖`.
    pub residual: f64,
    pub passed: bool,
}

/// Tests `H ∈ HK(B)`: skew-Hamiltonian and mapping each `x_k` to `x_{k+1}`.
pub fn membership(h: &DenseMatrix, basis: &OrderedBasis, tol: Tolerance) -> Membership {
    let dim = 2 * basis.n();
    if h.shape() != (dim, dim) {
        return Membership { skew_defect: f64::INFINITY, skew_threshold: 0.0, residual: f64::INFINITY, passed: false };
    }
    let skew = is_skew_hamiltonian(h, tol).expect("even square checked above");
    let x = basis.matrix();
    let residual = (0..basis.len() - 1)
        .map(|k| {
            let next = x.column(k + 1);
            (h * x.column(k) - next).norm() / next.norm()
        })
        .fold(0.0, f64::max);
    Membership {
        skew_defect: skew.defect,
        skew_threshold: skew.threshold,
        residual,
        passed: skew.passed && residual <= tol.rel,
    }
}

/// Frobenius-nearest element of `HK(B)` to `a`.
pub fn nearest_realizer(basis: &OrderedBasis, a: &DenseMatrix) -> Result<DenseMatrix> {
    RealizationFamily::new(basis.clone())?.nearest(a)
}
