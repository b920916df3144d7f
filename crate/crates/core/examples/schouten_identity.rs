//! The r-matrix `r_τ = τ^α M_{αμ} ∧ P^μ`, its Schouten square and the
//! invariant element `Ω`, for a non-diagonal metric and several `τ`.
//!
//! `cargo run --example schouten_identity`

use kappa_iso::config::non_diagonal_lorentzian;
use kappa_iso::render::{wedge, Style};
use kappa_iso::wedge::verify_schouten;
use kappa_iso::{omega, r_matrix, schouten_square, Algebra, VectorTau};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = non_diagonal_lorentzian();
    let alg = Algebra::new(g.clone());
    println!("Ω = {}\n", wedge(&omega(&alg), Style::Text));
    for t in [[1, 0, 0, 0], [0, 0, 0, 1], [1, 0, 0, 1], [3, -1, 2, 5]] {
        let tau = VectorTau::from_ints(&g, &t)?;
        let r = r_matrix(&alg, &tau)?;
        println!("τ = {t:?}, τ² = {}", tau.square());
        println!("  r_τ = {}", wedge(&r, Style::Text));
        println!("  [[r_τ, r_τ]] has {} terms", schouten_square(&r)?.terms().count());
        let report = verify_schouten(&alg, &tau)?;
        print!("{report}");
        if !report.passed() {
            std::process::exit(1);
        }
    }
    Ok(())
}
