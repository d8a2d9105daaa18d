//! Realizer whose restriction to the Lagrangian subspace has eigenvalues
//! `±1, ±2i`, and a check that random family members keep that spectrum.

use num_complex::Complex64;
use skewham::lagrangian::random_lagrangian_onb;
use skewham::realization::{coeffs_from_roots, restricted_spectrum, spectrum_distance, SpectrumFamily};
use skewham::sampling::seeded;
use skewham::SkewParam;

fn main() -> skewham::Result<()> {
    let roots = [
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, 2.0),
        Complex64::new(0.0, -2.0),
    ];
    let spec = coeffs_from_roots(&roots)?;
    println!("characteristic polynomial coefficients {:?}", spec.coeffs());

    let basis = random_lagrangian_onb(4, 3)?;
    let fam = SpectrumFamily::new(basis.clone(), &spec)?;
    let eig = restricted_spectrum(fam.htilde(), &basis)?;
    println!("restricted eigenvalues: {eig:.6?}");

    let mut rng = seeded(0);
    for _ in 0..3 {
        let h = fam.element(&SkewParam::random(fam.param_dim(), &mut rng))?;
        let d = spectrum_distance(&restricted_spectrum(&h, &basis)?, spec.values());
        println!("random member: |H|_F = {:7.3}, spectrum mismatch {d:.1e}", h.norm());
    }
    Ok(())
}
