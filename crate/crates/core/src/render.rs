//! Text and LaTeX rendering.
//!
//! Expanded elements are written as flat sums `c κ^{-k} monomial`. The
//! coproduct and antipode of a generator can also be written symbolically in
//! terms of `Π_τ`, `C_τ`, `P_τ` and `M_{τμ}`, with the numeric components of
//! `τ` substituted and vanishing terms dropped.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{raised_momentum, AlgebraElement};
use crate::error::{Error, Result};
use crate::hopf::DeformationContext;
use crate::lie::{GenIndex, Generator, LieBasis};
use crate::scalar::{format_rational, GaussRational, Rational};
use crate::series::HSeries;
use crate::tensor::TensorElement;
use crate::wedge::WedgeElement;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Latex,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "latex" => Ok(OutputFormat::Latex),
            _ => Err(Error::Parse(format!("unknown output format {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

/// Compact series text without the truncation marker.
pub fn series_inline(s: &HSeries) -> String {
    let mut parts = Vec::new();
    for (k, c) in s.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        parts.push(match k {
            0 => format!("{c}"),
            1 => format!("{c}·h"),
            _ => format!("{c}·h^{k}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

fn kappa(k: usize, style: Style) -> String {
    match (k, style) {
        (0, _) => String::new(),
        (k, Style::Text) => format!("κ⁻{}", superscript(k)),
        (k, Style::Latex) => format!("\\kappa^{{-{k}}}"),
    }
}

fn rational_latex(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

/// Sign and magnitude text of a coefficient; the magnitude is empty for ±1.
fn split_coeff(c: &GaussRational, style: Style) -> (bool, String) {
    if c.im.is_zero() {
        let neg = c.re.is_negative();
        let a = c.re.abs();
        let mag = if a.is_one() {
            String::new()
        } else {
            match style {
                Style::Text if a.is_integer() => format_rational(&a),
                Style::Text => format!("({})", format_rational(&a)),
                Style::Latex => rational_latex(&a),
            }
        };
        return (neg, mag);
    }
    if c.re.is_zero() {
        let neg = c.im.is_negative();
        let a = c.im.abs();
        let mag = match style {
            Style::Text if a.is_one() => "i".to_string(),
            Style::Text if a.is_integer() => format!("{}i", format_rational(&a)),
            Style::Text => format!("({})i", format_rational(&a)),
            Style::Latex if a.is_one() => "i".to_string(),
            Style::Latex => format!("{}\\,i", rational_latex(&a)),
        };
        return (neg, mag);
    }
    let mag = match style {
        Style::Text => format!("{c}"),
        Style::Latex => {
            let sign = if c.im.is_negative() { "-" } else { "+" };
            format!("\\left({} {sign} {}\\,i\\right)", rational_latex(&c.re), rational_latex(&c.im.abs()))
        }
    };
    (false, mag)
}

/// Join `(coefficient, κ power, body)` terms into a signed sum. An empty body
/// stands for `1`.
fn join_terms(terms: &[(GaussRational, usize, String)], style: Style) -> String {
    let mut out = String::new();
    for (c, k, body) in terms {
        if c.is_zero() {
            continue;
        }
        let (neg, mag) = split_coeff(c, style);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let kap = kappa(*k, style);
        let mut prefix = mag;
        prefix.push_str(&kap);
        match (prefix.is_empty(), body.is_empty()) {
            (true, true) => out.push('1'),
            (true, false) => out.push_str(body),
            (false, true) => out.push_str(&prefix),
            (false, false) => {
                out.push_str(&prefix);
                out.push_str(if style == Style::Latex { "\\," } else { " " });
                out.push_str(body);
            }
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn generator_latex(g: Generator) -> String {
    match g {
        Generator::Momentum(mu) => format!("P_{{{mu}}}"),
        Generator::Rotation(mu, nu) => format!("M_{{{mu}{nu}}}"),
    }
}

pub fn monomial(basis: &LieBasis, m: &[GenIndex], style: Style) -> String {
    match style {
        Style::Text if m.is_empty() => String::new(),
        Style::Text => crate::algebra::monomial_string(basis, m),
        Style::Latex => {
            let mut parts = Vec::new();
            let mut i = 0;
            while i < m.len() {
                let mut j = i;
                while j < m.len() && m[j] == m[i] {
                    j += 1;
                }
                let g = generator_latex(basis.generator(m[i]));
                parts.push(if j - i == 1 { g } else { format!("{g}^{{{}}}", j - i) });
                i = j;
            }
            parts.join(" ")
        }
    }
}

pub fn series(s: &HSeries, style: Style) -> String {
    let terms: Vec<_> = s.coeffs().iter().enumerate().map(|(k, c)| (c.clone(), k, String::new())).collect();
    join_terms(&terms, style)
}

pub fn algebra(x: &AlgebraElement, style: Style) -> String {
    let basis = x.algebra().basis();
    let mut terms = Vec::new();
    for (m, c) in x.terms() {
        let body = monomial(basis, m, style);
        for (k, ck) in c.coeffs().iter().enumerate() {
            terms.push((ck.clone(), k, body.clone()));
        }
    }
    terms.sort_by_key(|t| t.1);
    join_terms(&terms, style)
}

pub fn tensor(t: &TensorElement, style: Style) -> String {
    let basis = t.algebra().basis();
    let sep = if style == Style::Latex { "\\otimes " } else { "⊗" };
    let mut terms = Vec::new();
    for (key, c) in t.terms() {
        let legs: Vec<String> = key
            .iter()
            .map(|m| if m.is_empty() { "1".to_string() } else { monomial(basis, m, style) })
            .collect();
        let body = legs.join(sep);
        for (k, ck) in c.coeffs().iter().enumerate() {
            terms.push((ck.clone(), k, body.clone()));
        }
    }
    terms.sort_by_key(|t| t.1);
    join_terms(&terms, style)
}

pub fn wedge(w: &WedgeElement, style: Style) -> String {
    let basis = w.algebra().basis();
    let sep = if style == Style::Latex { "\\wedge " } else { "∧" };
    let terms: Vec<_> = w
        .terms()
        .map(|(key, c)| {
            let gens: Vec<String> = key
                .iter()
                .map(|&g| match style {
                    Style::Text => basis.generator(g).to_string(),
                    Style::Latex => generator_latex(basis.generator(g)),
                })
                .collect();
            (c.clone(), 0, gens.join(sep))
        })
        .collect();
    join_terms(&terms, style)
}

/// A factor of a symbolic expression. `α` is a summed index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Momentum(usize),
    /// `P^α`.
    RaisedAlpha,
    /// `P_α`.
    LoweredAlpha,
    /// `M_{αμ}`.
    RotationAlpha(usize),
    Rotation(usize, usize),
    /// `M_{τμ} = τ^α M_{αμ}`.
    RotationTau(usize),
    PTau,
    Pi,
    PiInv,
    Casimir,
    CTau,
}

impl Symbol {
    fn render(self, style: Style) -> String {
        match (self, style) {
            (Symbol::Momentum(mu), Style::Text) => format!("P_{mu}"),
            (Symbol::Momentum(mu), Style::Latex) => format!("P_{{{mu}}}"),
            (Symbol::RaisedAlpha, Style::Text) => "P^α".into(),
            (Symbol::RaisedAlpha, Style::Latex) => "P^{\\alpha}".into(),
            (Symbol::LoweredAlpha, Style::Text) => "P_α".into(),
            (Symbol::LoweredAlpha, Style::Latex) => "P_{\\alpha}".into(),
            (Symbol::RotationAlpha(mu), Style::Text) => format!("M_α{mu}"),
            (Symbol::RotationAlpha(mu), Style::Latex) => format!("M_{{\\alpha {mu}}}"),
            (Symbol::Rotation(mu, nu), Style::Text) => format!("M_{mu}{nu}"),
            (Symbol::Rotation(mu, nu), Style::Latex) => format!("M_{{{mu}{nu}}}"),
            (Symbol::RotationTau(mu), Style::Text) => format!("M_τ{mu}"),
            (Symbol::RotationTau(mu), Style::Latex) => format!("M_{{\\tau {mu}}}"),
            (Symbol::PTau, Style::Text) => "P_τ".into(),
            (Symbol::PTau, Style::Latex) => "P_\\tau".into(),
            (Symbol::Pi, Style::Text) => "Π_τ".into(),
            (Symbol::Pi, Style::Latex) => "\\Pi_\\tau".into(),
            (Symbol::PiInv, Style::Text) => "Π_τ⁻¹".into(),
            (Symbol::PiInv, Style::Latex) => "\\Pi_\\tau^{-1}".into(),
            (Symbol::Casimir, _) => "C".into(),
            (Symbol::CTau, Style::Text) => "C_τ".into(),
            (Symbol::CTau, Style::Latex) => "C_\\tau".into(),
        }
    }

    fn summed(self) -> bool {
        matches!(self, Symbol::RaisedAlpha | Symbol::LoweredAlpha | Symbol::RotationAlpha(_))
    }

    fn evaluate(self, ctx: &DeformationContext, alpha: usize) -> AlgebraElement {
        let (alg, n) = (ctx.algebra(), ctx.order());
        match self {
            Symbol::Momentum(mu) => AlgebraElement::momentum(alg, mu, n),
            Symbol::RaisedAlpha => raised_momentum(alg, alpha, n),
            Symbol::LoweredAlpha => AlgebraElement::momentum(alg, alpha, n),
            Symbol::RotationAlpha(mu) => AlgebraElement::rotation(alg, alpha, mu, n),
            Symbol::Rotation(mu, nu) => AlgebraElement::rotation(alg, mu, nu, n),
            Symbol::RotationTau(mu) => ctx.m_tau()[mu].clone(),
            Symbol::PTau => ctx.p_tau().clone(),
            Symbol::Pi => ctx.pi_tau().clone(),
            Symbol::PiInv => ctx.pi_tau_inv().clone(),
            Symbol::Casimir => ctx.casimir().clone(),
            Symbol::CTau => ctx.c_tau().clone(),
        }
    }
}

/// `coeff · κ^{-kappa} · (leg₁ ⊗ … )`, each leg a product of symbols.
#[derive(Clone, Debug)]
pub struct SymbolicTerm {
    pub coeff: Rational,
    pub kappa: usize,
    pub legs: Vec<Vec<Symbol>>,
}

#[derive(Clone, Debug)]
pub struct SymbolicExpr {
    pub legs: usize,
    pub terms: Vec<SymbolicTerm>,
}

impl SymbolicExpr {
    fn new(legs: usize) -> SymbolicExpr {
        SymbolicExpr { legs, terms: Vec::new() }
    }

    fn push(&mut self, coeff: Rational, kappa: usize, legs: Vec<Vec<Symbol>>) {
        if !coeff.is_zero() {
            self.terms.push(SymbolicTerm { coeff, kappa, legs });
        }
    }

    pub fn render(&self, style: Style) -> String {
        let sep = if style == Style::Latex { "\\otimes " } else { "⊗" };
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|t| {
                let legs: Vec<String> = t
                    .legs
                    .iter()
                    .map(|leg| {
                        if leg.is_empty() {
                            "1".to_string()
                        } else {
                            leg.iter().map(|s| s.render(style)).collect::<Vec<_>>().join("")
                        }
                    })
                    .collect();
                (GaussRational::real(t.coeff.clone()), t.kappa, legs.join(sep))
            })
            .collect();
        join_terms(&terms, style)
    }

    /// Expand back into the algebra (one leg) or a tensor (two legs).
    pub fn evaluate(&self, ctx: &DeformationContext) -> TensorElement {
        let (alg, n) = (ctx.algebra(), ctx.order());
        let mut out = TensorElement::zero(alg, self.legs, n);
        for t in &self.terms {
            let summed = t.legs.iter().flatten().any(|s| s.summed());
            let range = if summed { 0..ctx.dim() } else { 0..1 };
            for alpha in range {
                let factors: Vec<AlgebraElement> = t
                    .legs
                    .iter()
                    .map(|leg| {
                        leg.iter().fold(AlgebraElement::one(alg, n), |acc, s| &acc * &s.evaluate(ctx, alpha))
                    })
                    .collect();
                let refs: Vec<&AlgebraElement> = factors.iter().collect();
                let term = TensorElement::from_legs(&refs).expect("same algebra");
                out = &out + &term.shift_h(t.kappa).scale(&GaussRational::real(t.coeff.clone()));
            }
        }
        out
    }
}

fn nonzero_rotation_tau(ctx: &DeformationContext, mu: usize) -> bool {
    !ctx.m_tau()[mu].is_zero()
}

/// `Δ_τ(x)` of a generator, symbolically.
pub fn symbolic_coproduct(ctx: &DeformationContext, g: Generator) -> SymbolicExpr {
    use Symbol::*;
    let tau = ctx.tau();
    let half = Rational::new(1.into(), 2.into());
    let mut e = SymbolicExpr::new(2);
    match g {
        Generator::Momentum(mu) => {
            let tm = tau.down(mu).clone();
            e.push(Rational::one(), 0, vec![vec![Momentum(mu)], vec![Pi]]);
            e.push(Rational::one(), 0, vec![vec![], vec![Momentum(mu)]]);
            e.push(-tm.clone(), 1, vec![vec![RaisedAlpha, PiInv], vec![LoweredAlpha]]);
            e.push(-(&tm * &half), 2, vec![vec![CTau, PiInv], vec![PTau]]);
        }
        Generator::Rotation(mu, nu) => {
            let (tm, tn) = (tau.down(mu).clone(), tau.down(nu).clone());
            e.push(Rational::one(), 0, vec![vec![Rotation(mu, nu)], vec![]]);
            e.push(Rational::one(), 0, vec![vec![], vec![Rotation(mu, nu)]]);
            e.push(tn.clone(), 1, vec![vec![RaisedAlpha, PiInv], vec![RotationAlpha(mu)]]);
            e.push(-tm.clone(), 1, vec![vec![RaisedAlpha, PiInv], vec![RotationAlpha(nu)]]);
            if nonzero_rotation_tau(ctx, nu) {
                e.push(-(&tm * &half), 2, vec![vec![CTau, PiInv], vec![RotationTau(nu)]]);
            }
            if nonzero_rotation_tau(ctx, mu) {
                e.push(&tn * &half, 2, vec![vec![CTau, PiInv], vec![RotationTau(mu)]]);
            }
        }
    }
    e
}

/// `S_τ(x)` of a generator, symbolically.
pub fn symbolic_antipode(ctx: &DeformationContext, g: Generator) -> SymbolicExpr {
    use Symbol::*;
    let tau = ctx.tau();
    let half = Rational::new(1.into(), 2.into());
    let mut e = SymbolicExpr::new(1);
    match g {
        Generator::Momentum(mu) => {
            let tm = tau.down(mu).clone();
            e.push(-Rational::one(), 0, vec![vec![Momentum(mu), PiInv]]);
            e.push(-tm.clone(), 1, vec![vec![Casimir, PiInv]]);
            e.push(-(&tm * &half), 2, vec![vec![PTau, CTau, PiInv]]);
        }
        Generator::Rotation(mu, nu) => {
            let (tm, tn) = (tau.down(mu).clone(), tau.down(nu).clone());
            e.push(-Rational::one(), 0, vec![vec![Rotation(mu, nu)]]);
            e.push(tn.clone(), 1, vec![vec![RaisedAlpha, RotationAlpha(mu)]]);
            e.push(-tm.clone(), 1, vec![vec![RaisedAlpha, RotationAlpha(nu)]]);
            if nonzero_rotation_tau(ctx, mu) {
                e.push(&tn * &half, 2, vec![vec![CTau, RotationTau(mu)]]);
            }
            if nonzero_rotation_tau(ctx, nu) {
                e.push(-(&tm * &half), 2, vec![vec![CTau, RotationTau(nu)]]);
            }
        }
    }
    e
}

/// Displays with a given style.
pub struct Styled<'a, T>(pub &'a T, pub Style);

impl fmt::Display for Styled<'_, SymbolicExpr> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.render(self.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::Metric;

    fn time_like() -> DeformationContext {
        DeformationContext::from_ints(Metric::minkowski(4), &[1, 0, 0, 0], 3).unwrap()
    }

    #[test]
    fn momentum_coproduct_time_like() {
        let ctx = time_like();
        let e = symbolic_coproduct(&ctx, Generator::Momentum(1));
        assert_eq!(e.render(Style::Text), "P_1⊗Π_τ + 1⊗P_1");
        assert_eq!(e.render(Style::Latex), "P_{1}\\otimes \\Pi_\\tau + 1\\otimes P_{1}");
    }

    #[test]
    fn energy_coproduct_time_like() {
        let ctx = time_like();
        let e = symbolic_coproduct(&ctx, Generator::Momentum(0));
        assert_eq!(
            e.render(Style::Text),
            "P_0⊗Π_τ + 1⊗P_0 + κ⁻¹ P^αΠ_τ⁻¹⊗P_α + (1/2)κ⁻² C_τΠ_τ⁻¹⊗P_τ"
        );
    }

    #[test]
    fn symbolic_forms_expand_to_the_computed_maps() {
        for tau in [[1, 0, 0, 0], [0, 0, 0, 1], [1, 0, 0, 1], [2, 1, -1, 3]] {
            let ctx = DeformationContext::from_ints(Metric::minkowski(4), &tau, 3).unwrap();
            for &g in ctx.algebra().basis().generators() {
                assert_eq!(symbolic_coproduct(&ctx, g).evaluate(&ctx), ctx.coproduct(g).unwrap(), "Δ({g}) at {tau:?}");
                let s = symbolic_antipode(&ctx, g).evaluate(&ctx);
                assert_eq!(s, TensorElement::from_algebra(&ctx.antipode(g).unwrap()), "S({g}) at {tau:?}");
            }
        }
    }

    #[test]
    fn flat_rendering() {
        let ctx = time_like();
        let text = algebra(ctx.pi_tau(), Style::Text);
        assert!(text.starts_with("1 + κ⁻¹ P_0"), "{text}");
        let latex = algebra(ctx.pi_tau(), Style::Latex);
        assert!(latex.contains("\\kappa^{-2}"), "{latex}");
        assert_eq!(series(&HSeries::zero(2), Style::Text), "0");
        let s = HSeries::from_coeffs(vec![GaussRational::zero(), GaussRational::from_ratio(-3, 2)], 2);
        assert_eq!(series(&s, Style::Latex), "-\\frac{3}{2}\\kappa^{-1}");
    }
}
