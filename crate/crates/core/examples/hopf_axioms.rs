//! Verify the Hopf axioms of the κ-deformation for a chosen `τ`.
//!
//! `cargo run --release --example hopf_axioms -- 1,0,0,0 4`

use kappa_iso::{DeformationContext, Metric};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let tau: Vec<i64> = args
        .next()
        .unwrap_or_else(|| "1,0,0,0".into())
        .split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<_, _>>()?;
    let order: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(3);
    let ctx = DeformationContext::from_ints(Metric::minkowski(tau.len()), &tau, order)?;
    println!("{}", ctx.verify_consistency());
    let report = ctx.verify_hopf();
    println!("{report}");
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
