//! Coproducts and antipodes in closed form, as text, LaTeX and JSON.
//!
//! `cargo run --example emit_coproducts -- light-like`

use kappa_iso::cli::{cmd_emit, EmitObject};
use kappa_iso::config::RunConfig;
use kappa_iso::json::{tensor_from_json, tensor_to_json};
use kappa_iso::render::OutputFormat;
use kappa_iso::Generator;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "time-like".into());
    let cfg = RunConfig::builtin(&name)?;
    println!("{}\n", cmd_emit(&cfg, EmitObject::Coproduct, None, Some(2), OutputFormat::Text)?);
    println!("{}\n", cmd_emit(&cfg, EmitObject::Antipode, None, Some(2), OutputFormat::Text)?);
    let boost = Generator::Rotation(0, 1);
    println!("{}\n", cmd_emit(&cfg, EmitObject::Coproduct, Some(boost), Some(2), OutputFormat::Latex)?);
    println!("r = {}", cmd_emit(&cfg, EmitObject::RMatrix, None, None, OutputFormat::Text)?);
    println!("[[r, r]] = {}", cmd_emit(&cfg, EmitObject::Schouten, None, None, OutputFormat::Text)?);

    let ctx = cfg.context(kappa_iso::config::BasisChoice::Identity, 2)?;
    let delta = ctx.coproduct(Generator::Momentum(0))?;
    let encoded = tensor_to_json(&delta);
    let decoded = tensor_from_json(ctx.algebra(), 2, &encoded)?;
    println!("\nΔ(P_0) expanded to order 2 has {} terms; JSON round trip exact: {}", delta.num_terms(), decoded == delta);
    Ok(())
}
