//! κ-Minkowski coordinates: normal ordering, the action of the deformed
//! Poincaré generators and the covariance checks.
//!
//! `cargo run --release --example kappa_minkowski -- 1,0,0,1 3`

use kappa_iso::minkowski::ModuleAction;
use kappa_iso::{AlgebraElement, DeformationContext, Metric};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let t: Vec<i64> = args
        .next()
        .unwrap_or_else(|| "1,0,0,0".into())
        .split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<_, _>>()?;
    let order: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2);
    let ctx = DeformationContext::from_ints(Metric::minkowski(t.len()), &t, order)?;
    let action = ModuleAction::new(&ctx);
    let d = ctx.dim();
    let (x0, x1) = (action.coordinate(0), action.coordinate(d - 1));
    println!("x^{} x^0 = {}", d - 1, action.word(&[(d - 1) as u8, 0]));
    println!("[x^0, x^{}] = {}", d - 1, &(&x0 * &x1) - &(&x1 * &x0));
    let a = action.word(&[0, (d - 1) as u8]);
    let alg = ctx.algebra();
    for (name, l) in [
        ("P_0", AlgebraElement::momentum(alg, 0, order)),
        ("M_01", AlgebraElement::rotation(alg, 0, 1, order)),
        ("C", ctx.casimir().clone()),
    ] {
        println!("{name} ▷ x^0 x^{} = {}", d - 1, action.act(&l, &a));
    }
    let report = action.verify_covariance(2);
    println!("{report}");
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
