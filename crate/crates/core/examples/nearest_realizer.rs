//! Frobenius-nearest realizer to an arbitrary matrix, with and without a
//! spectrum constraint.

use skewham::lagrangian::random_lagrangian_basis;
use skewham::realization::{coeffs_from_roots, nearest_realizer, nearest_realizer_with_spectrum};
use skewham::sampling::{gaussian_matrix, seeded};

fn main() -> skewham::Result<()> {
    let mut rng = seeded(11);
    let n = 4;
    let basis = random_lagrangian_basis(n, 10.0, &mut rng)?;
    let a = gaussian_matrix(2 * n, 2 * n, &mut rng);

    let h = nearest_realizer(&basis, &a)?;
    println!("unconstrained: |H - A|_F / |A|_F = {:.4}", (&h - &a).norm() / a.norm());

    let roots: Vec<_> = [0.5, -0.5, 1.5, -1.5].iter().map(|&r| num_complex::Complex64::new(r, 0.0)).collect();
    let spec = coeffs_from_roots(&roots)?;
    let hs = nearest_realizer_with_spectrum(&basis, &spec, &a)?;
    println!("with spectrum: |H - A|_F / |A|_F = {:.4}", (&hs - &a).norm() / a.norm());
    Ok(())
}
