//! Majid-Ruegg generators for a time-like or space-like `τ`, in the
//! orthogonal basis adapted to it.
//!
//! `cargo run --release --example majid_ruegg -- 0,0,0,1 4`

use kappa_iso::majid_ruegg::{mr_generators, verify_mr};
use kappa_iso::render::{algebra, Style};
use kappa_iso::{orthogonal_decompose, Metric, VectorTau};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let t: Vec<i64> = args
        .next()
        .unwrap_or_else(|| "1,0,0,0".into())
        .split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<_, _>>()?;
    let order: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(3);
    let g = Metric::minkowski(t.len());
    let tau = VectorTau::from_ints(&g, &t)?;
    let basis = orthogonal_decompose(&g, &tau)?;
    let ctx = basis.adapted_context(&tau, order)?;
    println!("adapted metric: {:?}", basis.target_metric());
    let mr = mr_generators(&ctx)?;
    println!("P̃_τ = {}", algebra(&mr.p_tau, Style::Text));
    println!("P̃_1 = {}", algebra(mr.momentum(1), Style::Text));
    let report = verify_mr(&ctx)?;
    println!("{report}");
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
