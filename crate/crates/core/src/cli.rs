//! The commands behind the `kappa` binary: classification, emission of the
//! deformation data and the verification suites.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::basis::BasisChange;
use crate::config::{BasisChoice, RunConfig, BUILTIN_NAMES, DEFAULT_ORDER, DEFAULT_TWIST_ORDER};
use crate::error::{Error, Result};
use crate::hopf::DeformationContext;
use crate::json;
use crate::lie::Generator;
use crate::majid_ruegg::verify_mr;
use crate::minkowski::verify_covariance;
use crate::orbit::classify_orbit;
use crate::render::{self, OutputFormat, Style};
use crate::report::VerificationReport;
use crate::twist::{build_twist, lc_structure_check, verify_twist};
use crate::wedge::{r_matrix, schouten_square, verify_schouten};

/// Highest coordinate degree checked by the Minkowski suite.
pub const MINKOWSKI_DEGREE: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Hopf,
    Mr,
    Twist,
    Minkowski,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(json!(s)).map_err(|_| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EmitObject {
    Coproduct,
    Antipode,
    Pi,
    CTau,
    RMatrix,
    Twist,
    Schouten,
}

impl FromStr for EmitObject {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(json!(s)).map_err(|_| Error::Parse(format!("unknown object {s:?}")))
    }
}

fn style(format: OutputFormat) -> Style {
    match format {
        OutputFormat::Latex => Style::Latex,
        _ => Style::Text,
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

pub fn cmd_classify(cfg: &RunConfig, format: OutputFormat) -> Result<String> {
    let o = classify_orbit(&cfg.metric, &cfg.tau)?;
    let sign = match o.tau_sq_sign {
        s if s < 0 => "negative",
        0 => "zero",
        _ => "positive",
    };
    let yb = serde_json::to_value(o.yb_type).expect("label");
    let yb = yb.as_str().unwrap_or_default();
    Ok(match format {
        OutputFormat::Json => {
            let mut v = json::orbit_to_json(&o);
            v["stability_label"] = json!(o.stability.to_string());
            v["suggested_basis"] = json!(o.suggested_basis());
            pretty(&v)
        }
        OutputFormat::Text => format!(
            "τ² sign: {sign}\nYang-Baxter type: {yb}\nstability group: {}\nsuggested basis: {}",
            o.stability,
            o.suggested_basis()
        ),
        OutputFormat::Latex => {
            let rel = match o.tau_sq_sign {
                s if s < 0 => "<",
                0 => "=",
                _ => ">",
            };
            format!(
                "\\tau^2 {rel} 0,\\quad \\text{{{yb}}},\\quad G_\\tau = \\mathrm{{{}}}",
                o.stability
            )
        }
    })
}

fn generators_or_all(ctx: &DeformationContext, g: Option<Generator>) -> Result<Vec<Generator>> {
    match g {
        Some(g) => {
            ctx.algebra().basis().index(g)?;
            Ok(vec![g])
        }
        None => Ok(ctx.algebra().basis().generators().to_vec()),
    }
}

fn generator_latex(g: Generator) -> String {
    match g {
        Generator::Momentum(mu) => format!("P_{{{mu}}}"),
        Generator::Rotation(mu, nu) => format!("M_{{{mu}{nu}}}"),
    }
}

/// The coproduct or antipode of one or all generators. A single generator is
/// printed as a bare expression; otherwise every line is labelled.
fn emit_generator_maps(
    ctx: &DeformationContext,
    object: EmitObject,
    generator: Option<Generator>,
    format: OutputFormat,
) -> Result<String> {
    let gens = generators_or_all(ctx, generator)?;
    let single = generator.is_some();
    let coproduct = object == EmitObject::Coproduct;
    if format == OutputFormat::Json {
        let mut out = serde_json::Map::new();
        for &g in &gens {
            let v = if coproduct {
                json::tensor_to_json(&ctx.coproduct(g)?)
            } else {
                json::algebra_to_json(&ctx.antipode(g)?)
            };
            if single {
                return Ok(pretty(&v));
            }
            out.insert(g.to_string(), v);
        }
        return Ok(pretty(&Value::Object(out)));
    }
    let st = style(format);
    let lines: Vec<String> = gens
        .iter()
        .map(|&g| {
            let e = if coproduct { render::symbolic_coproduct(ctx, g) } else { render::symbolic_antipode(ctx, g) };
            let body = e.render(st);
            if single {
                return body;
            }
            match (st, coproduct) {
                (Style::Text, true) => format!("Δ({g}) = {body}"),
                (Style::Text, false) => format!("S({g}) = {body}"),
                (Style::Latex, true) => format!("\\Delta_\\tau({}) = {body}", generator_latex(g)),
                (Style::Latex, false) => format!("S_\\tau({}) = {body}", generator_latex(g)),
            }
        })
        .collect();
    Ok(lines.join("\n"))
}

/// Render the requested object. The twist exists only for a light-like `τ`
/// and is emitted in the light-cone basis.
pub fn cmd_emit(
    cfg: &RunConfig,
    object: EmitObject,
    generator: Option<Generator>,
    order: Option<usize>,
    format: OutputFormat,
) -> Result<String> {
    let st = style(format);
    match object {
        EmitObject::Coproduct | EmitObject::Antipode => {
            let ctx = cfg.context(BasisChoice::Identity, order.or(cfg.truncation_order).unwrap_or(DEFAULT_ORDER))?;
            emit_generator_maps(&ctx, object, generator, format)
        }
        EmitObject::Pi | EmitObject::CTau => {
            let ctx = cfg.context(BasisChoice::Identity, order.or(cfg.truncation_order).unwrap_or(DEFAULT_ORDER))?;
            let x = if object == EmitObject::Pi { ctx.pi_tau() } else { ctx.c_tau() };
            Ok(match format {
                OutputFormat::Json => pretty(&json::algebra_to_json(x)),
                _ => render::algebra(x, st),
            })
        }
        EmitObject::RMatrix | EmitObject::Schouten => {
            let b = cfg.basis_change(BasisChoice::Identity)?;
            let alg = crate::algebra::Algebra::new(b.target_metric().clone());
            let tau = b.tau_in_new(&cfg.tau)?;
            let r = r_matrix(&alg, &tau)?;
            let w = if object == EmitObject::RMatrix { r } else { schouten_square(&r)? };
            Ok(match format {
                OutputFormat::Json => pretty(&json::wedge_to_json(&w)),
                _ => render::wedge(&w, st),
            })
        }
        EmitObject::Twist => {
            if cfg.tau.square_sign() != 0 {
                return Err(Error::NonNullTau(format!(
                    "no twist: τ² = {} ≠ 0, so r_τ solves the modified Yang-Baxter equation and the \
                     deformation is not a twist; twists exist only for light-like τ, where r_τ solves the \
                     classical Yang-Baxter equation",
                    crate::scalar::format_rational(cfg.tau.square())
                )));
            }
            let ctx = cfg.context(BasisChoice::LightCone, order.or(cfg.truncation_order).unwrap_or(DEFAULT_TWIST_ORDER))?;
            let t = build_twist(&ctx)?;
            Ok(match format {
                OutputFormat::Json => pretty(&json::twist_to_json(&t)),
                OutputFormat::Text => format!("F = {}\nR = {}", render::tensor(&t.f, st), render::tensor(&t.r, st)),
                OutputFormat::Latex => {
                    format!("\\mathcal{{F}} = {}\n\\mathcal{{R}} = {}", render::tensor(&t.f, st), render::tensor(&t.r, st))
                }
            })
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub reports: Vec<VerificationReport>,
    pub skipped: Vec<String>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(VerificationReport::passed)
    }

    /// `0` when every executed check passed, `1` otherwise.
    pub fn exit_code(&self) -> u8 {
        u8::from(!self.passed())
    }

    pub fn render(&self, format: OutputFormat) -> String {
        if format == OutputFormat::Json {
            return pretty(&json!({
                "passed": self.passed(),
                "reports": self.reports.iter().map(json::report_to_json).collect::<Vec<_>>(),
                "skipped": self.skipped,
            }));
        }
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&r.to_string());
        }
        for s in &self.skipped {
            out.push_str(&format!("skipped: {s}\n"));
        }
        out.push_str(if self.passed() { "result: PASS" } else { "result: FAIL" });
        out
    }
}

fn with_basis_checks(mut report: VerificationReport, b: &BasisChange, cfg: &RunConfig, new: &DeformationContext) -> Result<VerificationReport> {
    if b.kind() != crate::basis::BasisKind::Identity {
        report.push(b.check_brackets());
        let old = DeformationContext::new(cfg.metric.clone(), cfg.tau.components().to_vec(), new.order())?;
        report.push(b.check_coproduct_covariance(&old, new));
    }
    Ok(report)
}

/// Run the requested suites. Suites that do not apply to this `τ` are
/// skipped with a notice; `all` adds the Schouten identity and the internal
/// consistency checks.
pub fn cmd_verify(cfg: &RunConfig, suite: Suite, order: Option<usize>) -> Result<VerifyOutcome> {
    let order_or = |default: usize| order.or(cfg.truncation_order).unwrap_or(default);
    let mut out = VerifyOutcome { reports: Vec::new(), skipped: Vec::new() };
    let wants = |s: Suite| suite == s || suite == Suite::All;
    let null = cfg.tau.square_sign() == 0;

    if suite == Suite::All {
        let b = cfg.basis_change(BasisChoice::Identity)?;
        let alg = crate::algebra::Algebra::new(b.target_metric().clone());
        out.reports.push(verify_schouten(&alg, &b.tau_in_new(&cfg.tau)?)?);
        out.reports.push(cfg.context(BasisChoice::Identity, order_or(DEFAULT_ORDER))?.verify_consistency());
    }
    if wants(Suite::Hopf) {
        out.reports.push(cfg.context(BasisChoice::Identity, order_or(DEFAULT_ORDER))?.verify_hopf());
    }
    if wants(Suite::Mr) {
        if null {
            out.skipped.push("mr: the Majid-Ruegg basis needs τ² ≠ 0".into());
        } else if cfg.basis == BasisChoice::LightCone {
            out.skipped.push("mr: needs an orthogonal basis adapted to τ, not a light-cone one".into());
        } else {
            let b = cfg.basis_change(BasisChoice::Orthogonal)?;
            let ctx = b.adapted_context(&cfg.tau, order_or(DEFAULT_ORDER))?;
            match verify_mr(&ctx) {
                Ok(r) => out.reports.push(with_basis_checks(r, &b, cfg, &ctx)?),
                Err(Error::Invalid(msg)) => out.skipped.push(format!("mr: {msg}")),
                Err(e) => return Err(e),
            }
        }
    }
    if wants(Suite::Twist) {
        if !null {
            out.skipped.push("twist: τ² ≠ 0, the deformation is not a twist".into());
        } else if matches!(cfg.basis, BasisChoice::Orthogonal) {
            out.skipped.push("twist: needs a light-cone basis adapted to τ".into());
        } else {
            let b = cfg.basis_change(BasisChoice::LightCone)?;
            let tau_new = b.tau_in_new(&cfg.tau)?;
            let ctx = b.adapted_context(&cfg.tau, order_or(DEFAULT_TWIST_ORDER))?;
            match verify_twist(&ctx) {
                Ok(r) => {
                    let mut r = with_basis_checks(r, &b, cfg, &ctx)?;
                    for c in lc_structure_check(b.target_metric(), &tau_new)?.checks {
                        if r.check(&c.name).is_none() {
                            r.push(c);
                        }
                    }
                    out.reports.push(r);
                }
                Err(Error::Invalid(msg)) => out.skipped.push(format!("twist: {msg}")),
                Err(e) => return Err(e),
            }
        }
    }
    if wants(Suite::Minkowski) {
        let ctx = cfg.context(BasisChoice::Identity, order_or(DEFAULT_TWIST_ORDER))?;
        out.reports.push(verify_covariance(&ctx, MINKOWSKI_DEGREE));
    }
    Ok(out)
}

/// The built-in configurations with their classification.
pub fn cmd_examples(format: OutputFormat) -> Result<String> {
    let mut rows = Vec::new();
    let mut values = Vec::new();
    for name in BUILTIN_NAMES {
        let cfg = RunConfig::builtin(name)?;
        let o = classify_orbit(&cfg.metric, &cfg.tau)?;
        let tau: Vec<String> = cfg.tau.components().iter().map(crate::scalar::format_rational).collect();
        rows.push(format!("{name:<26} τ = ({})  {o}", tau.join(",")));
        let mut v = cfg.to_json();
        v["classification"] = json::orbit_to_json(&o);
        values.push(v);
    }
    Ok(match format {
        OutputFormat::Json => pretty(&Value::Array(values)),
        _ => rows.join("\n"),
    })
}

/// The configuration named by `--example` or read from `--config`.
pub fn resolve_config(example: Option<&str>, path: Option<&std::path::Path>) -> Result<RunConfig> {
    match (example, path) {
        (Some(_), Some(_)) => Err(Error::Invalid("give either --example or --config, not both".into())),
        (Some(name), None) => RunConfig::builtin(name),
        (None, Some(p)) => RunConfig::load(p),
        (None, None) => Err(Error::Invalid("a configuration is required: use --example NAME or --config PATH".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_labels() {
        let text = cmd_classify(&RunConfig::builtin("time-like").unwrap(), OutputFormat::Text).unwrap();
        assert!(text.contains("SO(3)") && text.contains("MYBE") && text.contains("orthogonal"), "{text}");
        let text = cmd_classify(&RunConfig::builtin("light-like").unwrap(), OutputFormat::Text).unwrap();
        assert!(text.contains("ISO(2)") && text.contains("CYBE") && text.contains("lightcone"), "{text}");
        let text = cmd_classify(&RunConfig::builtin("tachyonic").unwrap(), OutputFormat::Text).unwrap();
        assert!(text.contains("SO(2,1)") && text.contains("MYBE"), "{text}");
    }

    #[test]
    fn emit_examples() {
        let time = RunConfig::builtin("time-like").unwrap();
        let e = cmd_emit(&time, EmitObject::Coproduct, Some(Generator::Momentum(1)), None, OutputFormat::Text).unwrap();
        assert_eq!(e, "P_1⊗Π_τ + 1⊗P_1");
        let light = RunConfig::builtin("light-like").unwrap();
        assert_eq!(cmd_emit(&light, EmitObject::Schouten, None, None, OutputFormat::Text).unwrap(), "0");
        assert!(matches!(
            cmd_emit(&time, EmitObject::Twist, None, None, OutputFormat::Text),
            Err(Error::NonNullTau(_))
        ));
        let twist = cmd_emit(&light, EmitObject::Twist, None, Some(2), OutputFormat::Text).unwrap();
        assert!(twist.starts_with("F = 1⊗1"), "{twist}");
    }

    #[test]
    fn inapplicable_suites_are_skipped() {
        let time = RunConfig::builtin("time-like").unwrap();
        let out = cmd_verify(&time, Suite::Twist, Some(2)).unwrap();
        assert!(out.reports.is_empty() && out.skipped.len() == 1 && out.passed());
        let light = RunConfig::builtin("light-like").unwrap();
        let out = cmd_verify(&light, Suite::Mr, Some(2)).unwrap();
        assert!(out.reports.is_empty() && out.skipped.len() == 1);
    }

    #[test]
    fn parse_names() {
        assert_eq!("c_tau".parse::<EmitObject>().unwrap(), EmitObject::CTau);
        assert_eq!("r_matrix".parse::<EmitObject>().unwrap(), EmitObject::RMatrix);
        assert_eq!("minkowski".parse::<Suite>().unwrap(), Suite::Minkowski);
        assert!("everything".parse::<Suite>().is_err());
    }
}
