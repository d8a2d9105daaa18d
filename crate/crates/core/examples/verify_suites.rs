//! Runs every verification suite on small random bases and prints the reports.

use skewham::analysis::{all_passed, run_suite, SuiteConfig};

fn main() -> skewham::Result<()> {
    let cfg = SuiteConfig { ns: vec![2, 4, 6], bases: 2, trials: 100, seed: 1 };
    let reports = run_suite("all", &cfg)?;
    for r in &reports {
        println!("{r}");
    }
    println!("all passed: {}", all_passed(&reports));
    Ok(())
}
