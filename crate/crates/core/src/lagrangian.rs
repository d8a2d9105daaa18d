//! Isotropic and Lagrangian subspaces of ℝ^{2n}.
//!
//! A subspace is isotropic when the symplectic form `x^T J y` vanishes on it; a
//! Lagrangian subspace is an isotropic subspace of the maximal dimension `n`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::matcore::{
    self, checked, is_skew_hamiltonian, j_mul, numerical_rank, orthonormal_range, spectral_norm,
    DenseMatrix, StructureCheck, SymplecticForm, Tolerance, Vector,
};
use crate::sampling::{self, gaussian_matrix, gaussian_vector, random_orthogonal};

/// Ordered, linearly independent vectors `x_1, …, x_k` in ℝ^{2n}, `k ≤ n`, stored as
/// the columns of `X`.
///
/// Construction checks shape and independence only. Isotropy is a tolerance
/// question and is checked by the operations that need it.
#[derive(Clone, Debug, PartialEq)]
pub struct OrderedBasis {
    x: DenseMatrix,
}

impl OrderedBasis {
    pub fn new(x: DenseMatrix) -> Result<Self> {
        let x = checked(x)?;
        let (rows, k) = x.shape();
        if rows == 0 || rows % 2 != 0 {
            return Err(Error::dim(format!("basis vectors need even length, got {rows}")));
        }
        if k == 0 || k > rows / 2 {
            return Err(Error::dim(format!(
                "an isotropic basis in R^{rows} has between 1 and {} vectors, got {k}",
                rows / 2
            )));
        }
        let rank = numerical_rank(&x);
        if rank < k {
            return Err(Error::RankDeficient { rank, expected: k });
        }
        Ok(OrderedBasis { x })
    }

    pub fn from_vectors(vectors: &[Vector]) -> Result<Self> {
        let rows = vectors.first().map_or(0, |v| v.len());
        if vectors.iter().any(|v| v.len() != rows) {
            return Err(Error::dim("basis vectors differ in length"));
        }
        Self::new(matcore::hstack(vectors, rows))
    }

    /// Half of the ambient dimension.
    pub fn n(&self) -> usize {
        self.x.nrows() / 2
    }

    /// Number of vectors.
    pub fn len(&self) -> usize {
        self.x.ncols()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True when the basis has `n` vectors, i.e. spans a Lagrangian candidate.
    pub fn is_full(&self) -> bool {
        self.len() == self.n()
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.x
    }

    pub fn into_matrix(self) -> DenseMatrix {
        self.x
    }

    pub fn vector(&self, i: usize) -> Vector {
        self.x.column(i).into_owned()
    }

    /// `X_L = [x_1 … x_{k-1}]` (zero columns when `k = 1`).
    pub fn left(&self) -> DenseMatrix {
        self.x.columns(0, self.len() - 1).into_owned()
    }

    /// `X_R = [x_2 … x_k]`.
    pub fn right(&self) -> DenseMatrix {
        self.x.columns(1, self.len() - 1).into_owned()
    }

    pub fn isotropy(&self, tol: Tolerance) -> StructureCheck {
        is_isotropic(&self.x, tol).expect("shape validated on construction")
    }

    /// `‖X^T X − I‖_F`.
    pub fn orthonormality_defect(&self) -> f64 {
        let k = self.len();
        (self.x.transpose() * &self.x - DenseMatrix::identity(k, k)).norm()
    }
}

/// `x^T J y`.
pub fn symplectic_pairing(x: &Vector, y: &Vector) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::dim(format!("vector lengths {} and {} differ", x.len(), y.len())));
    }
    Ok(SymplecticForm::for_dim(x.len())?.pairing(x, y))
}

/// Defect `‖X^T J X‖_F` against `rel·‖X^T X‖_F + abs`.
pub fn is_isotropic(x: &DenseMatrix, tol: Tolerance) -> Result<StructureCheck> {
    if x.nrows() == 0 || !x.nrows().is_multiple_of(2) {
        return Err(Error::dim(format!("expected an even number of rows, got {}", x.nrows())));
    }
    if x.ncols() > x.nrows() {
        return Err(Error::dim(format!("{} columns exceed the ambient dimension", x.ncols())));
    }
    let defect = (x.transpose() * j_mul(x)).norm();
    let scale = (x.transpose() * x).norm();
    Ok(StructureCheck::new(defect, tol.threshold(scale)))
}

/// Projects `v` onto `range(q)^⊥` for orthonormal `q`, two passes.
fn project_out(q: &DenseMatrix, v: &mut Vector) {
    if q.ncols() == 0 {
        return;
    }
    for _ in 0..2 {
        let c = q.transpose() * &*v;
        v.gemv(-1.0, q, &c, 1.0);
    }
}

/// Turns a nearly isotropic sequence `x_1, …, x_k` into an isotropic one.
///
/// `y_1 = x_1`; each later `y_j` is the orthogonal projection of `x_j` onto
/// `null(Y^T J) = range(J^T Y)^⊥` with `Y = [y_1 … y_{j-1}]`. A vector whose projection
/// falls below `tol.rel·‖x_j‖`, or which lands in `span(Y)`, is reported as
/// [`Error::LinearDependence`].
pub fn isotropize(x: &DenseMatrix, tol: Tolerance) -> Result<OrderedBasis> {
    let (rows, k) = x.shape();
    SymplecticForm::for_dim(rows)?;
    if k == 0 || k > rows / 2 {
        return Err(Error::dim(format!("cannot isotropize {k} vectors in R^{rows}")));
    }
    let mut y = DenseMatrix::zeros(rows, k);
    for j in 0..k {
        let xj = x.column(j).into_owned();
        let xnorm = xj.norm();
        let mut yj = xj.clone();
        if j > 0 {
            let ycur = y.columns(0, j).into_owned();
            let w = orthonormal_range(&matcore::jt_mul(&ycur));
            project_out(&w, &mut yj);
        }
        let ynorm = yj.norm();
        if !(ynorm > tol.rel * xnorm) || ynorm == 0.0 {
            return Err(Error::LinearDependence { index: j, ratio: ynorm / xnorm });
        }
        if j > 0 {
            let span = orthonormal_range(&y.columns(0, j).into_owned());
            let mut fresh = yj.clone();
            project_out(&span, &mut fresh);
            let ratio = fresh.norm() / ynorm;
            if ratio <= tol.rel {
                return Err(Error::LinearDependence { index: j, ratio });
            }
        }
        y.set_column(j, &yj);
    }
    OrderedBasis::new(y)
}

/// Output of [`isotropic_arnoldi`].
#[derive(Clone, Debug)]
pub struct ArnoldiBasis {
    /// Orthonormal, isotropic columns `q_1, …, q_m`.
    pub basis: OrderedBasis,
    /// `Some(j)` when vector `j` (1-based) could not be generated.
    pub breakdown: Option<usize>,
}

/// Orthonormal basis of `K_k(H, x_1)` for skew-Hamiltonian `H`.
///
/// Every new direction is orthogonalized against both `q_i` and `J q_i` with two
/// passes of classical Gram–Schmidt, which keeps the basis orthonormal and isotropic
/// to working precision.
pub fn isotropic_arnoldi(h: &DenseMatrix, x1: &Vector, k: usize, tol: Tolerance) -> Result<ArnoldiBasis> {
    let check = is_skew_hamiltonian(h, tol)?;
    if !check.passed {
        return Err(Error::NotSkewHamiltonian { defect: check.defect, threshold: check.threshold });
    }
    let dim = h.nrows();
    let n = dim / 2;
    if x1.len() != dim {
        return Err(Error::dim(format!("start vector has length {}, expected {dim}", x1.len())));
    }
    if k == 0 || k > n {
        return Err(Error::dim(format!("Krylov dimension must lie in 1..={n}, got {k}")));
    }
    let x1norm = x1.norm();
    if !(x1norm > 0.0) {
        return Err(Error::InvalidArgument("start vector is zero".into()));
    }

    // Columns 0..m hold q_i, columns n..n+m hold J q_i.
    let mut both = DenseMatrix::zeros(dim, 2 * n);
    let mut q = DenseMatrix::zeros(dim, k);
    let form = SymplecticForm::new(n)?;
    let push = |both: &mut DenseMatrix, q: &mut DenseMatrix, m: usize, v: &Vector| {
        q.set_column(m, v);
        both.set_column(m, v);
        both.set_column(n + m, &form.apply(v));
    };

    push(&mut both, &mut q, 0, &(x1 / x1norm));
    let mut m = 1;
    let mut breakdown = None;
    while m < k {
        let mut w = h * q.column(m - 1);
        let scale = w.norm();
        let active = DenseMatrix::from_fn(dim, 2 * m, |i, j| {
            if j < m {
                both[(i, j)]
            } else {
                both[(i, n + j - m)]
            }
        });
        project_out(&active, &mut w);
        let wnorm = w.norm();
        if !(wnorm > tol.threshold(scale)) {
            breakdown = Some(m + 1);
            break;
        }
        push(&mut both, &mut q, m, &(w / wnorm));
        m += 1;
    }
    let basis = OrderedBasis::new(q.columns(0, m).into_owned())?;
    Ok(ArnoldiBasis { basis, breakdown })
}

/// Random skew-Hamiltonian `J^T (R − R^T)` with standard normal `R`.
pub fn random_skew_hamiltonian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DenseMatrix {
    let r = gaussian_matrix(2 * n, 2 * n, rng);
    matcore::jt_mul(&(&r - r.transpose()))
}

const ONB_ATTEMPTS: usize = 10;

/// Orthonormal basis of a random Lagrangian subspace, drawn from the isotropic
/// Arnoldi process on a random skew-Hamiltonian matrix and start vector.
pub fn random_lagrangian_onb_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<OrderedBasis> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let tol = Tolerance::default();
    let mut last_step = 0;
    for _ in 0..ONB_ATTEMPTS {
        let h = random_skew_hamiltonian(n, rng);
        let x1 = gaussian_vector(2 * n, rng);
        let out = isotropic_arnoldi(&h, &x1, n, tol)?;
        match out.breakdown {
            None => return Ok(out.basis),
            Some(step) => last_step = step,
        }
    }
    Err(Error::Breakdown { step: last_step })
}

/// Seeded variant of [`random_lagrangian_onb_with`].
pub fn random_lagrangian_onb(n: usize, seed: u64) -> Result<OrderedBasis> {
    random_lagrangian_onb_with(n, &mut sampling::seeded(seed))
}

/// Non-orthonormal basis `Q·M` of a random Lagrangian subspace, where `Q` is a random
/// orthonormal Lagrangian basis and `M = U·diag(s)·V^T` has random orthogonal
/// factors and singular values log-uniform in `[1/√c, √c]`, so `cond(X) ≤ c`.
pub fn random_lagrangian_basis<R: Rng + ?Sized>(n: usize, max_cond: f64, rng: &mut R) -> Result<OrderedBasis> {
    if !(max_cond >= 1.0) {
        return Err(Error::InvalidArgument(format!("condition bound must be >= 1, got {max_cond}")));
    }
    let q = random_lagrangian_onb_with(n, rng)?;
    let half_log = 0.5 * max_cond.ln();
    let s: Vec<f64> = (0..n).map(|_| rng.random_range(-half_log..=half_log).exp()).collect();
    let u = random_orthogonal(n, rng);
    let v = random_orthogonal(n, rng);
    let m = u * DenseMatrix::from_diagonal(&Vector::from_vec(s)) * v.transpose();
    OrderedBasis::new(q.matrix() * m)
}

/// Gap `‖P_X − P_Y‖₂` between two subspaces, always in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct SubspaceGap(f64);

impl SubspaceGap {
    pub fn value(self) -> f64 {
        self.0
    }
}

fn full_rank_range(m: &DenseMatrix) -> Result<DenseMatrix> {
    let q = orthonormal_range(m);
    if q.ncols() < m.ncols() {
        return Err(Error::RankDeficient { rank: q.ncols(), expected: m.ncols() });
    }
    Ok(q)
}

/// Gap between `range(X)` and `range(Y)` measured by orthogonal projectors.
pub fn subspace_gap(x: &DenseMatrix, y: &DenseMatrix) -> Result<SubspaceGap> {
    if x.nrows() != y.nrows() {
        return Err(Error::dim(format!("ambient dimensions {} and {} differ", x.nrows(), y.nrows())));
    }
    let qx = full_rank_range(x)?;
    let qy = full_rank_range(y)?;
    let diff = &qx * qx.transpose() - &qy * qy.transpose();
    Ok(SubspaceGap(spectral_norm(&diff).clamp(0.0, 1.0)))
}
