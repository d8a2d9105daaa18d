//! Isotropic Arnoldi on a random skew-Hamiltonian matrix, then isotropization of a
//! slightly perturbed Krylov sequence.

use skewham::lagrangian::{is_isotropic, isotropic_arnoldi, isotropize, random_skew_hamiltonian, subspace_gap};
use skewham::sampling::{gaussian_matrix, gaussian_vector, seeded};
use skewham::{DenseMatrix, Tolerance};

fn main() -> skewham::Result<()> {
    let n = 6;
    let mut rng = seeded(5);
    let h = random_skew_hamiltonian(n, &mut rng);
    let x1 = gaussian_vector(2 * n, &mut rng);
    let tol = Tolerance::default();

    let arnoldi = isotropic_arnoldi(&h, &x1, n, tol)?;
    let q = arnoldi.basis.matrix();
    println!("Arnoldi: {} vectors, breakdown {:?}", q.ncols(), arnoldi.breakdown);
    println!("  orthonormality defect {:.1e}", (q.transpose() * q - DenseMatrix::identity(q.ncols(), q.ncols())).norm());
    println!("  isotropy defect       {:.1e}", is_isotropic(q, tol)?.defect);

    let perturbed = q + 1e-4 * gaussian_matrix(2 * n, q.ncols(), &mut rng);
    let y = isotropize(&perturbed, tol)?;
    println!("perturbed isotropy defect {:.1e}", is_isotropic(&perturbed, tol)?.defect);
    println!("isotropized defect        {:.1e}", is_isotropic(y.matrix(), tol)?.defect);
    println!("gap to perturbed span     {:.1e}", subspace_gap(&perturbed, y.matrix())?.value());
    Ok(())
}
