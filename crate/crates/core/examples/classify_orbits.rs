//! Orbit classification of `τ` for the built-in configurations and a few
//! metrics of other signatures.
//!
//! `cargo run --example classify_orbits`

use kappa_iso::config::{RunConfig, BUILTIN_NAMES};
use kappa_iso::{classify_orbit, Metric, VectorTau};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in BUILTIN_NAMES {
        let cfg = RunConfig::builtin(name)?;
        let o = classify_orbit(&cfg.metric, &cfg.tau)?;
        println!("{name:<26} {o}  (basis: {})", o.suggested_basis());
    }
    println!();
    let cases: [(&[i64], &[i64]); 5] = [
        (&[1, 1, 1], &[1, 0, 0]),
        (&[-1, -1, 1], &[1, 0, 0]),
        (&[-1, -1, 1], &[0, 0, 1]),
        (&[-1, -1, 1, 1], &[1, 0, 1, 0]),
        (&[-1, 1, 1, 1, 1], &[0, 0, 0, 0, 2]),
    ];
    for (diag, t) in cases {
        let g = Metric::diagonal(diag)?;
        let tau = VectorTau::from_ints(&g, t)?;
        let (p, q) = g.signature();
        println!("signature ({p},{q}), τ = {t:?}: {}", classify_orbit(&g, &tau)?);
    }
    Ok(())
}
