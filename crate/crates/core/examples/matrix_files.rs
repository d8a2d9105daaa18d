//! Round-trips a basis through the plain-text matrix format used by the CLI.

use skewham::lagrangian::random_lagrangian_onb;
use skewham::matcore::{format_matrix, parse_matrix};

fn main() -> skewham::Result<()> {
    let basis = random_lagrangian_onb(2, 9)?;
    let text = format_matrix(basis.matrix());
    print!("{text}");
    let back = parse_matrix(&text)?;
    println!("bit-exact round trip: {}", &back == basis.matrix());
    Ok(())
}
