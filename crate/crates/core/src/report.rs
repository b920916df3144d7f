//! Verification reports.

use std::fmt;
use std::time::Duration;

use crate::algebra::AlgebraElement;
use crate::minkowski::MinkowskiElement;
use crate::series::HSeries;
use crate::tensor::TensorElement;
use crate::wedge::WedgeElement;

/// The first nonzero term of a failed identity.
#[derive(Clone, Debug)]
pub enum Residual {
    Scalar(HSeries),
    Algebra(AlgebraElement),
    Tensor(TensorElement),
    Wedge(WedgeElement),
    Minkowski(MinkowskiElement),
    Message(String),
}

impl Residual {
    pub fn algebra(e: &AlgebraElement) -> Residual {
        let mut lead = AlgebraElement::zero(e.algebra(), e.order());
        if let Some((m, c)) = e.leading_term() {
            lead.add_term(m, &c);
        }
        Residual::Algebra(lead)
    }

    pub fn tensor(t: &TensorElement) -> Residual {
        let mut lead = TensorElement::zero(t.algebra(), t.legs(), t.order());
        if let Some((k, c)) = t.leading_term() {
            lead.add_term(k, &c);
        }
        Residual::Tensor(lead)
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Scalar(s) => write!(f, "{s}"),
            Residual::Algebra(a) => write!(f, "{a}"),
            Residual::Tensor(t) => write!(f, "{t}"),
            Residual::Wedge(w) => write!(f, "{w}"),
            Residual::Minkowski(m) => write!(f, "{m}"),
            Residual::Message(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub generator: Option<String>,
    pub residual: Option<Residual>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>) -> CheckResult {
        CheckResult { name: name.into(), passed: true, generator: None, residual: None }
    }

    pub fn fail(name: impl Into<String>, generator: Option<String>, residual: Residual) -> CheckResult {
        CheckResult { name: name.into(), passed: false, generator, residual: Some(residual) }
    }

    /// Pass iff the difference vanishes.
    pub fn algebra_zero(name: &str, generator: Option<String>, diff: &AlgebraElement) -> CheckResult {
        if diff.is_zero() {
            CheckResult::pass(name)
        } else {
            CheckResult::fail(name, generator, Residual::algebra(diff))
        }
    }

    pub fn tensor_zero(name: &str, generator: Option<String>, diff: &TensorElement) -> CheckResult {
        if diff.is_zero() {
            CheckResult::pass(name)
        } else {
            CheckResult::fail(name, generator, Residual::tensor(diff))
        }
    }

    /// Fold per-generator outcomes into one entry, keeping the first failure.
    pub fn all(name: &str, results: impl IntoIterator<Item = CheckResult>) -> CheckResult {
        for r in results {
            if !r.passed {
                return CheckResult { name: name.into(), ..r };
            }
        }
        CheckResult::pass(name)
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> VerificationReport {
        VerificationReport { suite: suite.into(), checks: Vec::new(), elapsed: Duration::ZERO }
    }

    pub fn push(&mut self, c: CheckResult) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.elapsed += other.elapsed;
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} ({:.2?})", self.suite, self.elapsed)?;
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name)?;
            if let Some(g) = &c.generator {
                write!(f, " at {g}")?;
            }
            if let Some(r) = &c.residual {
                write!(f, ": residual {r}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
