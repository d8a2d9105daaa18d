//! Walks the affine family of realizers: its dimension, a random member, and the
//! fact that every member still generates the same Krylov sequence.

use skewham::lagrangian::random_lagrangian_basis;
use skewham::realization::membership;
use skewham::sampling::seeded;
use skewham::{RealizationFamily, SkewParam, Tolerance};

fn main() -> skewham::Result<()> {
    let mut rng = seeded(7);
    for n in 1..=6 {
        let basis = random_lagrangian_basis(n, 10.0, &mut rng)?;
        let fam = RealizationFamily::new(basis)?;
        let s = SkewParam::random(fam.param_dim(), &mut rng);
        let h = fam.element(&s)?;
        let m = membership(&h, fam.basis(), Tolerance::default());
        println!(
            "n = {n}: {} free parameters, member |H|_F = {:8.4} >= |H-hat|_F = {:8.4}, in family: {}",
            fam.generators().len(),
            h.norm(),
            fam.hhat().norm(),
            m.passed
        );
    }
    Ok(())
}
