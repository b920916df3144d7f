//! Run configurations: a metric, a deforming vector, a truncation order and
//! the preferred basis. Rationals are written as `"num/den"` strings.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::VectorTau;
use crate::basis::{lightcone_decompose, orthogonal_decompose, BasisChange};
use crate::error::{Error, Result};
use crate::hopf::DeformationContext;
use crate::json::{matrix_from_json, matrix_to_json, rational_from_json};
use crate::metric::Metric;
use crate::render::OutputFormat;
use crate::scalar::{format_rational, int, parse_rational, Rational};

pub const DEFAULT_ORDER: usize = 4;
pub const DEFAULT_TWIST_ORDER: usize = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisChoice {
    /// Identity for the Hopf and Minkowski suites, the adapted basis where a
    /// suite needs one.
    #[default]
    Auto,
    Identity,
    Orthogonal,
    #[serde(rename = "lightcone")]
    LightCone,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub name: Option<String>,
    pub metric: Metric,
    pub tau: VectorTau,
    /// `None` means the per-suite default.
    pub truncation_order: Option<usize>,
    pub basis: BasisChoice,
    pub output_format: OutputFormat,
}

fn rationals(v: &Value, what: &str) -> Result<Vec<Rational>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("{what} must be an array")))?
        .iter()
        .map(rational_from_json)
        .collect()
}

impl RunConfig {
    pub fn new(metric: Metric, tau: &[Rational]) -> Result<RunConfig> {
        let tau = VectorTau::new(&metric, tau.to_vec())?;
        if tau.is_zero() {
            return Err(Error::ZeroTau);
        }
        Ok(RunConfig {
            name: None,
            metric,
            tau,
            truncation_order: None,
            basis: BasisChoice::Auto,
            output_format: OutputFormat::Text,
        })
    }

    pub fn from_json(v: &Value) -> Result<RunConfig> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("config must be a JSON object".into()))?;
        let metric_v = obj.get("metric").ok_or_else(|| Error::Parse("missing field \"metric\"".into()))?;
        let metric = Metric::new(matrix_from_json(metric_v)?)?;
        let tau_v = obj.get("tau").ok_or_else(|| Error::Parse("missing field \"tau\"".into()))?;
        let tau = rationals(tau_v, "tau")?;
        if let Some(d) = obj.get("dimension") {
            let d = d.as_u64().ok_or_else(|| Error::Parse("dimension must be an integer".into()))? as usize;
            if d != metric.dim() || d != tau.len() {
                return Err(Error::Invalid(format!(
                    "dimension {d} does not match a {}×{} metric and {} components of τ",
                    metric.dim(),
                    metric.dim(),
                    tau.len()
                )));
            }
        }
        let mut cfg = RunConfig::new(metric, &tau)?;
        cfg.name = obj.get("name").and_then(Value::as_str).map(str::to_string);
        if let Some(n) = obj.get("truncation_order") {
            let n = n.as_u64().ok_or_else(|| Error::Parse("truncation_order must be an integer".into()))? as usize;
            if n < 1 {
                return Err(Error::Invalid("truncation_order must be at least 1".into()));
            }
            cfg.truncation_order = Some(n);
        }
        if let Some(b) = obj.get("basis") {
            cfg.basis = serde_json::from_value(b.clone()).map_err(|e| Error::Parse(format!("basis: {e}")))?;
        }
        if let Some(f) = obj.get("output_format") {
            cfg.output_format = serde_json::from_value(f.clone()).map_err(|e| Error::Parse(format!("output_format: {e}")))?;
        }
        Ok(cfg)
    }

    pub fn parse(text: &str) -> Result<RunConfig> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))?;
        RunConfig::from_json(&v)
    }

    pub fn load(path: &Path) -> Result<RunConfig> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        RunConfig::parse(&text)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "dimension": self.metric.dim(),
            "metric": matrix_to_json(self.metric.entries()),
            "tau": self.tau.components().iter().map(format_rational).collect::<Vec<_>>(),
            "basis": self.basis,
            "output_format": self.output_format,
        });
        if let Some(name) = &self.name {
            v["name"] = json!(name);
        }
        if let Some(n) = self.truncation_order {
            v["truncation_order"] = json!(n);
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    pub fn order(&self) -> usize {
        self.truncation_order.unwrap_or(DEFAULT_ORDER)
    }

    /// The basis change requested by `basis`; `auto` resolves to `fallback`.
    pub fn basis_change(&self, fallback: BasisChoice) -> Result<BasisChange> {
        let choice = if self.basis == BasisChoice::Auto { fallback } else { self.basis };
        match choice {
            BasisChoice::Auto | BasisChoice::Identity => Ok(BasisChange::identity(&self.metric)),
            BasisChoice::Orthogonal => orthogonal_decompose(&self.metric, &self.tau),
            BasisChoice::LightCone => lightcone_decompose(&self.metric, &self.tau),
        }
    }

    /// The deformation in the basis chosen with `fallback` for `auto`.
    pub fn context(&self, fallback: BasisChoice, order: usize) -> Result<DeformationContext> {
        self.basis_change(fallback)?.adapted_context(&self.tau, order)
    }

    pub fn builtin(name: &str) -> Result<RunConfig> {
        let (metric, tau): (Metric, Vec<i64>) = match name {
            "time-like" => (Metric::minkowski(4), vec![1, 0, 0, 0]),
            "tachyonic" => (Metric::minkowski(4), vec![0, 0, 0, 1]),
            "light-like" => (Metric::minkowski(4), vec![1, 0, 0, 1]),
            "kleinian" => (Metric::diagonal(&[1, -1, 1, -1])?, vec![1, 1, 1, 1]),
            "non-diagonal-lorentzian" => (non_diagonal_lorentzian(), vec![1, 0, 0, 0]),
            _ => {
                return Err(Error::Invalid(format!(
                    "unknown example {name:?}; available: {}",
                    BUILTIN_NAMES.join(", ")
                )))
            }
        };
        let tau: Vec<Rational> = tau.into_iter().map(int).collect();
        let mut cfg = RunConfig::new(metric, &tau)?;
        cfg.name = Some(name.to_string());
        Ok(cfg)
    }
}

pub const BUILTIN_NAMES: [&str; 5] = ["time-like", "tachyonic", "light-like", "kleinian", "non-diagonal-lorentzian"];

/// `η` with rational off-diagonal entries in the `(0,1)` and `(1,3)` slots.
pub fn non_diagonal_lorentzian() -> Metric {
    let q = |s: &str| parse_rational(s).expect("literal");
    let rows = [
        ["-1", "1/3", "0", "0"],
        ["1/3", "1", "0", "1/5"],
        ["0", "0", "1", "0"],
        ["0", "1/5", "0", "1"],
    ];
    Metric::new(rows.iter().map(|r| r.iter().map(|s| q(s)).collect()).collect()).expect("nondegenerate")
}
