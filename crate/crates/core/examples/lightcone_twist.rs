//! Light-cone basis, extended Jordanian twist and R-matrix for a null `τ`.
//!
//! `cargo run --release --example lightcone_twist -- kleinian 3`

use kappa_iso::twist::{build_twist, lc_structure_check, verify_twist};
use kappa_iso::{lightcone_decompose, Metric, VectorTau};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let which = args.next().unwrap_or_else(|| "lorentzian".into());
    let order: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2);
    let (g, t) = match which.as_str() {
        "kleinian" => (Metric::diagonal(&[1, -1, 1, -1])?, [1, 1, 1, 1]),
        _ => (Metric::minkowski(4), [1, 0, 0, 1]),
    };
    let tau = VectorTau::from_ints(&g, &t)?;
    let basis = lightcone_decompose(&g, &tau)?;
    println!("light-cone basis vectors (old components):");
    for (i, c) in basis.columns().iter().enumerate() {
        let c: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        println!("  e'_{i} = ({})", c.join(", "));
    }
    println!("metric in the new basis: {:?}", basis.target_metric());
    println!("{}", lc_structure_check(&g, &tau)?);

    let ctx = basis.adapted_context(&tau, order)?;
    let tw = build_twist(&ctx)?;
    println!("F has {} terms, R has {} terms", tw.f.num_terms(), tw.r.num_terms());
    let report = verify_twist(&ctx)?;
    println!("{report}");
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
