//! Dense real matrix kernel: the symplectic unit `J`, the ⋆-adjoint, SVD-based
//! pseudoinverse and complements, and matrix norms.
//!
//! `J = [[0, I], [-I, 0]]` is never multiplied out in the library paths. Applying it
//! is a block swap with a sign flip, so `J·A`, `A·J` and the ⋆-adjoint are exact in
//! floating point.

mod io;

pub use self::io::{format_f64, format_matrix, parse_matrix, read_matrix, write_matrix, write_matrix_file};

use faer::{Mat, MatRef};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type DenseMatrix = DMatrix<f64>;
pub type Vector = DVector<f64>;

/// Relative tolerance with an absolute floor: a quantity passes when it is at most
/// `rel * scale + abs`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { rel: 1e-10, abs: 1e-13 }
    }
}

impl Tolerance {
    pub fn new(rel: f64, abs: f64) -> Result<Self> {
        if !(rel >= 0.0 && abs >= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "tolerances must be nonnegative, got rel={rel}, abs={abs}"
            )));
        }
        Ok(Tolerance { rel, abs })
    }

    pub fn threshold(&self, scale: f64) -> f64 {
        self.rel * scale + self.abs
    }
}

/// Outcome of a structural test (skew-Hamiltonicity, isotropy, ...).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StructureCheck {
    pub defect: f64,
    pub threshold: f64,
    pub passed: bool,
}

impl StructureCheck {
    pub(crate) fn new(defect: f64, threshold: f64) -> Self {
        StructureCheck { defect, threshold, passed: defect <= threshold }
    }
}

/// Rejects matrices containing NaN or infinite entries.
pub fn checked(m: DenseMatrix) -> Result<DenseMatrix> {
    for j in 0..m.ncols() {
        for i in 0..m.nrows() {
            if !m[(i, j)].is_finite() {
                return Err(Error::NonFinite { row: i, col: j });
            }
        }
    }
    Ok(m)
}

/// The symplectic bilinear form on ℝ^{2n}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    n: usize,
}

impl SymplecticForm {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("half-dimension must be positive".into()));
        }
        Ok(SymplecticForm { n })
    }

    /// Builds the form acting on vectors of (even) length `dim`.
    pub fn for_dim(dim: usize) -> Result<Self> {
        if dim == 0 || !dim.is_multiple_of(2) {
            return Err(Error::dim(format!("expected a positive even dimension, got {dim}")));
        }
        Ok(SymplecticForm { n: dim / 2 })
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn matrix(&self) -> DenseMatrix {
        j_matrix(self.n)
    }

    /// `J·v`: maps `(u, v)` to `(v, -u)`.
    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.len(), self.dim());
        let n = self.n;
        Vector::from_fn(2 * n, |i, _| if i < n { v[i + n] } else { -v[i - n] })
    }

    /// `x^T J y`.
    pub fn pairing(&self, x: &Vector, y: &Vector) -> f64 {
        x.dot(&self.apply(y))
    }
}

/// Materialized `J_{2n}`.
pub fn j_matrix(n: usize) -> DenseMatrix {
    assert!(n >= 1, "j_matrix requires n >= 1");
    let mut j = DenseMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j[(i, n + i)] = 1.0;
        j[(n + i, i)] = -1.0;
    }
    j
}

fn half_rows(a: &DenseMatrix) -> usize {
    assert!(a.nrows().is_multiple_of(2), "row count must be even, got {}", a.nrows());
    a.nrows() / 2
}

fn half_cols(a: &DenseMatrix) -> usize {
    assert!(a.ncols().is_multiple_of(2), "column count must be even, got {}", a.ncols());
    a.ncols() / 2
}

/// `J·A` (rows of `A` must be even).
pub fn j_mul(a: &DenseMatrix) -> DenseMatrix {
    let n = half_rows(a);
    DenseMatrix::from_fn(a.nrows(), a.ncols(), |i, j| if i < n { a[(i + n, j)] } else { -a[(i - n, j)] })
}

/// `J^T·A`.
pub fn jt_mul(a: &DenseMatrix) -> DenseMatrix {
    let n = half_rows(a);
    DenseMatrix::from_fn(a.nrows(), a.ncols(), |i, j| if i < n { -a[(i + n, j)] } else { a[(i - n, j)] })
}

/// `A·J` (columns of `A` must be even).
pub fn mul_j(a: &DenseMatrix) -> DenseMatrix {
    let n = half_cols(a);
    DenseMatrix::from_fn(a.nrows(), a.ncols(), |i, j| if j < n { -a[(i, j + n)] } else { a[(i, j - n)] })
}

fn require_even_square(a: &DenseMatrix, what: &str) -> Result<()> {
    if a.nrows() != a.ncols() || !a.nrows().is_multiple_of(2) || a.nrows() == 0 {
        return Err(Error::dim(format!(
            "{what} needs a square matrix of even dimension, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    Ok(())
}

/// The adjoint with respect to the symplectic form, `A* = J^T A^T J`.
pub fn star_adjoint(a: &DenseMatrix) -> Result<DenseMatrix> {
    require_even_square(a, "star_adjoint")?;
    Ok(jt_mul(&mul_j(&a.transpose())))
}

/// Tests `A = A*` with defect `‖A − A*‖_F` against `rel·‖A‖_F + abs`.
pub fn is_skew_hamiltonian(a: &DenseMatrix, tol: Tolerance) -> Result<StructureCheck> {
    let star = star_adjoint(a)?;
    let defect = (a - star).norm();
    Ok(StructureCheck::new(defect, tol.threshold(a.norm())))
}

/// `(M − M^T) / 2`, skew-symmetric to the last bit.
pub fn skew_part(m: &DenseMatrix) -> DenseMatrix {
    assert!(m.is_square());
    let d = m.nrows();
    DenseMatrix::from_fn(d, d, |i, j| {
        if i == j {
            0.0
        } else if i > j {
            0.5 * (m[(i, j)] - m[(j, i)])
        } else {
            -0.5 * (m[(j, i)] - m[(i, j)])
        }
    })
}

/// Singular values are treated as zero below `max(m, k)·eps·σ_max`.
pub fn rank_cutoff(rows: usize, cols: usize, sigma_max: f64) -> f64 {
    rows.max(cols) as f64 * f64::EPSILON * sigma_max
}

// SVDs go through faer: nalgebra's bidiagonal SVD loses accuracy (recomposition
// errors near 1e-10) when two singular values nearly coincide.

fn to_faer(x: &DenseMatrix) -> Mat<f64> {
    Mat::from_fn(x.nrows(), x.ncols(), |i, j| x[(i, j)])
}

fn from_faer(m: MatRef<'_, f64>) -> DenseMatrix {
    DenseMatrix::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
}

/// `(U, σ, V)` with σ descending; `U` is square when `full`, thin otherwise.
fn svd(x: &DenseMatrix, full: bool) -> (DenseMatrix, Vec<f64>, DenseMatrix) {
    let m = to_faer(x);
    let k = x.nrows().min(x.ncols());
    let (u, s, v) = if full {
        let d = m.svd().expect("SVD of a finite matrix converges");
        (from_faer(d.U()), (0..k).map(|i| d.S().column_vector()[i]).collect(), from_faer(d.V()))
    } else {
        let d = m.thin_svd().expect("SVD of a finite matrix converges");
        (from_faer(d.U()), (0..k).map(|i| d.S().column_vector()[i]).collect(), from_faer(d.V()))
    };
    (u, s, v)
}

/// Singular values in descending order.
pub fn singular_values(x: &DenseMatrix) -> Vec<f64> {
    if x.is_empty() {
        return Vec::new();
    }
    to_faer(x).singular_values().expect("SVD of a finite matrix converges")
}

pub fn numerical_rank(x: &DenseMatrix) -> usize {
    let s = singular_values(x);
    match s.first() {
        None => 0,
        Some(&smax) => {
            let cut = rank_cutoff(x.nrows(), x.ncols(), smax);
            s.iter().filter(|&&v| v > cut).count()
        }
    }
}

/// `σ_max / σ_min` over the `min(m, k)` singular values; 1 for an empty matrix.
pub fn condition_number(x: &DenseMatrix) -> f64 {
    let s = singular_values(x);
    match (s.first(), s.last()) {
        (Some(&hi), Some(&lo)) if lo > 0.0 => hi / lo,
        (Some(_), Some(_)) => f64::INFINITY,
        _ => 1.0,
    }
}

/// Moore–Penrose pseudoinverse via SVD with the repo-wide rank cutoff.
pub fn pinv(x: &DenseMatrix) -> DenseMatrix {
    let (m, k) = x.shape();
    if x.is_empty() {
        return DenseMatrix::zeros(k, m);
    }
    let (u, s, v) = svd(x, false);
    let cut = rank_cutoff(m, k, s[0]);
    let mut out = DenseMatrix::zeros(k, m);
    for (r, &sigma) in s.iter().enumerate() {
        if sigma <= cut {
            break;
        }
        // out += v_r σ_r^{-1} u_r^T
        out.ger(1.0 / sigma, &v.column(r), &u.column(r), 1.0);
    }
    out
}

/// Full left singular basis of `x` (square `rows × rows`) and the numerical rank.
fn full_left_basis(x: &DenseMatrix) -> (DenseMatrix, usize) {
    let m = x.nrows();
    if x.ncols() == 0 || m == 0 {
        return (DenseMatrix::identity(m, m), 0);
    }
    let (u, s, _) = svd(x, true);
    let cut = rank_cutoff(x.nrows(), x.ncols(), s[0]);
    let rank = s.iter().filter(|&&v| v > cut).count();
    (u, rank)
}

/// Orthonormal basis of `range(X)`, one column per numerical rank.
pub fn orthonormal_range(x: &DenseMatrix) -> DenseMatrix {
    let (u, rank) = full_left_basis(x);
    u.columns(0, rank).into_owned()
}

/// Orthonormal basis of `range(X)^⊥`; zero columns when `X` has full row rank.
pub fn orthonormal_complement(x: &DenseMatrix) -> DenseMatrix {
    let (u, rank) = full_left_basis(x);
    let m = u.ncols();
    u.columns(rank, m - rank).into_owned()
}

pub fn spectral_norm(a: &DenseMatrix) -> f64 {
    singular_values(a).first().copied().unwrap_or(0.0)
}

pub fn frobenius_norm(a: &DenseMatrix) -> f64 {
    a.norm()
}

/// Eigenvalues of a real square matrix.
pub fn eigenvalues(a: &DenseMatrix) -> Vec<Complex64> {
    assert!(a.is_square(), "eigenvalues need a square matrix");
    if a.is_empty() {
        return Vec::new();
    }
    to_faer(a)
        .eigenvalues()
        .expect("eigen-solver converges on a finite matrix")
        .into_iter()
        .map(|z| Complex64::new(z.re, z.im))
        .collect()
}

/// Concatenates the given column vectors into a matrix.
pub fn hstack(cols: &[Vector], rows: usize) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(rows, cols.len());
    for (j, c) in cols.iter().enumerate() {
        m.set_column(j, c);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_abs_diff(a: &DenseMatrix, b: &DenseMatrix) -> f64 {
        assert_eq!(a.shape(), b.shape());
        (a - b).amax()
    }

    fn unit_outer(dim: usize, i: usize, j: usize) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(dim, dim);
        m[(i, j)] = 1.0;
        m
    }

    #[test]
    fn j_small_cases() {
        assert_eq!(j_matrix(1), DenseMatrix::from_row_slice(2, 2, &[0.0, 1.0, -1.0, 0.0]));
        let expected = DenseMatrix::from_row_slice(
            4,
            4,
            &[0., 0., 1., 0., 0., 0., 0., 1., -1., 0., 0., 0., 0., -1., 0., 0.],
        );
        assert_eq!(j_matrix(2), expected);
        for n in 1..6 {
            let j = j_matrix(n);
            assert_eq!(j.transpose() * &j, DenseMatrix::identity(2 * n, 2 * n));
            assert_eq!(j.transpose(), -&j);
        }
    }

    #[test]
    fn block_applications_match_materialized_j() {
        let a = DenseMatrix::from_fn(6, 6, |i, j| (i * 7 + j * 3) as f64 - 10.0);
        let j = j_matrix(3);
        assert_eq!(j_mul(&a), &j * &a);
        assert_eq!(jt_mul(&a), j.transpose() * &a);
        assert_eq!(mul_j(&a), &a * &j);
        let form = SymplecticForm::new(3).unwrap();
        let v = Vector::from_fn(6, |i, _| i as f64 + 1.0);
        assert_eq!(form.apply(&v), &j * &v);
        assert_eq!(form.apply(&v).as_slice(), &[4.0, 5.0, 6.0, -1.0, -2.0, -3.0]);
    }

    #[test]
    fn star_adjoint_examples() {
        let i4 = DenseMatrix::identity(4, 4);
        assert_eq!(star_adjoint(&i4).unwrap(), i4);
        assert_eq!(star_adjoint(&j_matrix(1)).unwrap(), -j_matrix(1));
        // e2 e1^T -> e3 e4^T (zero-based: (1,0) -> (2,3))
        assert_eq!(star_adjoint(&unit_outer(4, 1, 0)).unwrap(), unit_outer(4, 2, 3));
        assert!(matches!(star_adjoint(&DenseMatrix::zeros(3, 3)), Err(Error::Dimension(_))));
        assert!(matches!(star_adjoint(&DenseMatrix::zeros(2, 4)), Err(Error::Dimension(_))));
    }

    #[test]
    fn skew_hamiltonian_examples() {
        let tol = Tolerance::default();
        let c = is_skew_hamiltonian(&DenseMatrix::identity(4, 4), tol).unwrap();
        assert!(c.passed);
        assert_eq!(c.defect, 0.0);

        let j = j_matrix(2);
        let c = is_skew_hamiltonian(&j, tol).unwrap();
        assert!(!c.passed);
        assert!((c.defect - 2.0 * j.norm()).abs() < 1e-15);

        let h = unit_outer(4, 1, 0) + unit_outer(4, 2, 3);
        assert!(is_skew_hamiltonian(&h, tol).unwrap().passed);
        assert!(is_skew_hamiltonian(&DenseMatrix::zeros(3, 3), tol).is_err());
    }

    #[test]
    fn pinv_examples() {
        let i3 = DenseMatrix::identity(3, 3);
        assert!(max_abs_diff(&pinv(&i3), &i3) < 1e-15);

        let mut e1 = DenseMatrix::zeros(4, 1);
        e1[(0, 0)] = 1.0;
        assert!(max_abs_diff(&pinv(&e1), &e1.transpose()) < 1e-15);

        let q = orthonormal_range(&DenseMatrix::from_fn(5, 3, |i, j| ((i + 1) * (j + 2)) as f64 + (i * j) as f64 * 0.5 + if i == j { 3.0 } else { 0.0 }));
        assert_eq!(q.ncols(), 3);
        assert!(max_abs_diff(&pinv(&q), &q.transpose()) < 1e-14);

        assert_eq!(pinv(&DenseMatrix::zeros(4, 0)).shape(), (0, 4));
        assert_eq!(pinv(&DenseMatrix::zeros(2, 3)), DenseMatrix::zeros(3, 2));
    }

    #[test]
    fn pinv_full_column_rank_matches_normal_equations() {
        let x = DenseMatrix::from_fn(6, 3, |i, j| ((i * 5 + j * 11) % 7) as f64 - 3.0 + if i == j { 4.0 } else { 0.0 });
        let normal = (x.transpose() * &x).try_inverse().unwrap() * x.transpose();
        assert!(max_abs_diff(&pinv(&x), &normal) < 1e-13);
    }

    #[test]
    fn complement_examples() {
        let mut e1 = DenseMatrix::zeros(4, 1);
        e1[(0, 0)] = 1.0;
        let q = orthonormal_complement(&e1);
        assert_eq!(q.shape(), (4, 3));
        assert!((q.transpose() * &e1).norm() < 1e-15);
        assert!((q.transpose() * &q - DenseMatrix::identity(3, 3)).norm() < 1e-14);
        // first row is zero: the complement lives in span{e2, e3, e4}
        assert!(q.row(0).norm() < 1e-15);

        let q = orthonormal_complement(&DenseMatrix::zeros(2, 0));
        assert_eq!(q.shape(), (2, 2));
        assert!((q.transpose() * &q - DenseMatrix::identity(2, 2)).norm() < 1e-15);

        assert_eq!(orthonormal_complement(&DenseMatrix::identity(4, 4)).ncols(), 0);
    }

    #[test]
    fn norm_examples() {
        assert!((spectral_norm(&DenseMatrix::identity(3, 3)) - 1.0).abs() < 1e-15);
        assert!((spectral_norm(&DenseMatrix::from_diagonal(&Vector::from_vec(vec![3.0, 1.0]))) - 3.0).abs() < 1e-15);
        let h = unit_outer(4, 1, 0) + unit_outer(4, 2, 3);
        assert!((spectral_norm(&h) - 1.0).abs() < 1e-15);

        assert_eq!(frobenius_norm(&DenseMatrix::zeros(3, 3)), 0.0);
        assert!((frobenius_norm(&DenseMatrix::identity(5, 5)) - 5f64.sqrt()).abs() < 1e-15);
        assert!((frobenius_norm(&h) - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn tolerance_validation() {
        assert!(Tolerance::new(-1.0, 0.0).is_err());
        assert!(Tolerance::new(0.0, f64::NAN).is_err());
        assert_eq!(Tolerance::default(), Tolerance::new(1e-10, 1e-13).unwrap());
    }

    #[test]
    fn checked_rejects_non_finite() {
        let mut m = DenseMatrix::zeros(2, 2);
        m[(1, 0)] = f64::NAN;
        assert!(matches!(checked(m), Err(Error::NonFinite { row: 1, col: 0 })));
    }

    #[test]
    fn symplectic_form_dims() {
        assert!(SymplecticForm::new(0).is_err());
        assert!(SymplecticForm::for_dim(3).is_err());
        assert_eq!(SymplecticForm::for_dim(8).unwrap().half_dim(), 4);
    }
}
