//! Realizers with a prescribed spectrum on the Lagrangian subspace.
//!
//! With `C` the companion matrix of `p(x) = ∏ (x − λ_k)`, every skew-Hamiltonian `H`
//! with `H X = X C` has the form `H̃ + J^T X^⊥ S (X^⊥)^T`, where
//! `H̃ = X C X^+ + (X C X^+)*` and `X^⊥` is an orthonormal basis of `span(X)^⊥`.

use num_complex::Complex64;

use super::{nearest_param, require_full, require_isotropic, structured_correction, SkewParam};
use crate::error::{Error, Result};
use crate::lagrangian::OrderedBasis;
use crate::matcore::{eigenvalues, orthonormal_complement, pinv, star_adjoint, DenseMatrix};

/// Relative tolerance used to pair conjugates and to recognise real values.
const PAIRING_TOL: f64 = 1e-12;

/// A conjugation-closed multiset `λ_1, …, λ_n` with the real coefficients
/// `a_0, …, a_{n-1}` of its monic polynomial `x^n + a_{n-1} x^{n-1} + … + a_0`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumSpec {
    values: Vec<Complex64>,
    coeffs: Vec<f64>,
}

impl SpectrumSpec {
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// `a_0, …, a_{n-1}` (the leading coefficient 1 is implicit).
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Evaluates the monic polynomial at `z`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(1.0, 0.0), |acc, &a| acc * z + a)
    }
}

/// Multiplies the ascending-order real polynomial `p` by a monic real factor given by
/// its ascending lower coefficients.
fn mul_monic(p: &[f64], factor_low: &[f64]) -> Vec<f64> {
    let d = factor_low.len();
    let mut out = vec![0.0; p.len() + d];
    for (i, &pi) in p.iter().enumerate() {
        for (j, &fj) in factor_low.iter().enumerate() {
            out[i + j] += pi * fj;
        }
        out[i + d] += pi;
    }
    out
}

/// Real coefficients of `∏ (x − λ_k)`.
///
/// Conjugates are matched greedily (nearest partner within `1e-12·(1+|λ|)`) and
/// multiplied as real quadratic factors, so no imaginary residue enters the result.
pub fn coeffs_from_roots(values: &[Complex64]) -> Result<SpectrumSpec> {
    if values.is_empty() {
        return Err(Error::InvalidArgument("spectrum must contain at least one value".into()));
    }
    if let Some(v) = values.iter().find(|v| !(v.re.is_finite() && v.im.is_finite())) {
        return Err(Error::InvalidArgument(format!("non-finite eigenvalue {v}")));
    }
    let mut used = vec![false; values.len()];
    let mut poly = vec![1.0];
    for i in 0..values.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let lam = values[i];
        let tol = PAIRING_TOL * (1.0 + lam.norm());
        if lam.im.abs() <= tol {
            poly = mul_monic(&poly, &[-lam.re]);
            continue;
        }
        let partner = (0..values.len())
            .filter(|&j| !used[j])
            .map(|j| (j, (values[j] - lam.conj()).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1));
        match partner {
            Some((j, dist)) if dist <= tol => {
                used[j] = true;
                let m = 0.5 * (lam + values[j].conj());
                poly = mul_monic(&poly, &[m.norm_sqr(), -2.0 * m.re]);
            }
            _ => return Err(Error::ConjugationViolation(lam)),
        }
    }
    poly.pop();
    Ok(SpectrumSpec { values: values.to_vec(), coeffs: poly })
}

/// Companion matrix: ones on the subdiagonal, `−a_0, …, −a_{n-1}` in the last column.
pub fn companion(spec: &SpectrumSpec) -> DenseMatrix {
    let n = spec.len();
    let mut c = DenseMatrix::zeros(n, n);
    for i in 1..n {
        c[(i, i - 1)] = 1.0;
    }
    for (i, &a) in spec.coeffs.iter().enumerate() {
        c[(i, n - 1)] = -a;
    }
    c
}

/// The spectrum-constrained family `H̃ + J^T X^⊥ S (X^⊥)^T`, `S ∈ ℝ^{n×n}` skew.
#[derive(Clone, Debug)]
pub struct SpectrumFamily {
    basis: OrderedBasis,
    companion: DenseMatrix,
    htilde: DenseMatrix,
    complement: DenseMatrix,
}

impl SpectrumFamily {
    pub fn new(basis: OrderedBasis, spec: &SpectrumSpec) -> Result<Self> {
        require_full(&basis)?;
        require_isotropic(&basis)?;
        if spec.len() != basis.n() {
            return Err(Error::dim(format!("spectrum has {} values, basis has {}", spec.len(), basis.n())));
        }
        let c = companion(spec);
        let x = basis.matrix();
        let m = x * &c * pinv(x);
        let htilde = &m + star_adjoint(&m)?;
        let complement = orthonormal_complement(x);
        Ok(SpectrumFamily { basis, companion: c, htilde, complement })
    }

    pub fn basis(&self) -> &OrderedBasis {
        &self.basis
    }

    pub fn companion(&self) -> &DenseMatrix {
        &self.companion
    }

    pub fn htilde(&self) -> &DenseMatrix {
        &self.htilde
    }

    /// Orthonormal basis `X^⊥` of `span(X)^⊥` (`n` columns).
    pub fn complement(&self) -> &DenseMatrix {
        &self.complement
    }

    pub fn param_dim(&self) -> usize {
        self.complement.ncols()
    }

    pub fn element(&self, s: &SkewParam) -> Result<DenseMatrix> {
        Ok(&self.htilde + structured_correction(&self.complement, s)?)
    }

    pub fn nearest_param(&self, a: &DenseMatrix) -> Result<SkewParam> {
        nearest_param(&self.complement, &self.htilde, a)
    }

    pub fn nearest(&self, a: &DenseMatrix) -> Result<DenseMatrix> {
        self.element(&self.nearest_param(a)?)
    }
}

/// `H̃ = X C X^+ + (X C X^+)*`.
pub fn hhat_with_spectrum(basis: &OrderedBasis, spec: &SpectrumSpec) -> Result<DenseMatrix> {
    Ok(SpectrumFamily::new(basis.clone(), spec)?.htilde)
}

pub fn spectrum_family_element(basis: &OrderedBasis, spec: &SpectrumSpec, s: &SkewParam) -> Result<DenseMatrix> {
    SpectrumFamily::new(basis.clone(), spec)?.element(s)
}

/// Frobenius-nearest matrix to `a` among the realizers with the prescribed spectrum.
pub fn nearest_realizer_with_spectrum(basis: &OrderedBasis, spec: &SpectrumSpec, a: &DenseMatrix) -> Result<DenseMatrix> {
    SpectrumFamily::new(basis.clone(), spec)?.nearest(a)
}

/// Eigenvalues of `H` restricted to `span(X)`, computed as `eig(X^+ H X)`.
pub fn restricted_spectrum(h: &DenseMatrix, basis: &OrderedBasis) -> Result<Vec<Complex64>> {
    let x = basis.matrix();
    if h.shape() != (x.nrows(), x.nrows()) {
        return Err(Error::dim(format!("matrix is {}x{}, basis lives in R^{}", h.nrows(), h.ncols(), x.nrows())));
    }
    Ok(eigenvalues(&(pinv(x) * h * x)))
}

/// Largest distance in a one-to-one matching of two equally sized multisets, matched
/// by repeatedly pairing the closest remaining elements.
pub fn spectrum_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len(), "spectra differ in size");
    let mut pairs: Vec<(f64, usize, usize)> = a
        .iter()
        .enumerate()
        .flat_map(|(i, x)| b.iter().enumerate().map(move |(j, y)| ((x - y).norm(), i, j)))
        .collect();
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0));
    let mut used_a = vec![false; a.len()];
    let mut used_b = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for (d, i, j) in pairs {
        if !used_a[i] && !used_b[j] {
            used_a[i] = true;
            used_b[j] = true;
            worst = worst.max(d);
        }
    }
    worst
}
