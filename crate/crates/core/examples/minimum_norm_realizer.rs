//! Builds the minimum-norm skew-Hamiltonian realizer of a random orthonormal
//! Lagrangian basis and checks that it reproduces the Krylov sequence.
//!
//! cargo run --example minimum_norm_realizer -- 5

use skewham::lagrangian::random_lagrangian_onb;
use skewham::matcore::{format_matrix, is_skew_hamiltonian, spectral_norm};
use skewham::realization::{hhat, membership};
use skewham::Tolerance;

fn main() -> skewham::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let basis = random_lagrangian_onb(n, 1)?;
    let h = hhat(&basis)?;

    let tol = Tolerance::default();
    let m = membership(&h, &basis, tol);
    println!("H-hat for n = {n}:\n{}", format_matrix(&h));
    println!("Krylov residual     {:.2e}", m.residual);
    println!("skew-Hamiltonian    {}", is_skew_hamiltonian(&h, tol)?.passed);
    println!("spectral norm       {:.15}", spectral_norm(&h));
    println!("Frobenius norm      {:.15}", h.norm());
    Ok(())
}
