//! JSON encodings. Integers that fit in `i64` are written as numbers, larger
//! ones as decimal strings; both forms are accepted on input.
//!
//! Elements are decoded into a given algebra at a given truncation order,
//! since neither is part of the encoding.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::algebra::{Algebra, AlgebraElement};
use crate::basis::BasisChange;
use crate::error::{Error, Result};
use crate::lie::Generator;
use crate::metric::RatMatrix;
use crate::minkowski::{MinkowskiElement, MinkowskiSpace};
use crate::orbit::OrbitClassification;
use crate::pbw::Monomial;
use crate::report::{CheckResult, Residual, VerificationReport};
use crate::scalar::{format_rational, parse_rational, GaussRational, Rational};
use crate::series::HSeries;
use crate::tensor::TensorElement;
use crate::twist::TwistData;
use crate::wedge::WedgeElement;

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn int_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(x) => json!(x),
        None => json!(n.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad(format!("not an integer: {n}"))),
        Value::String(s) => BigInt::from_str(s.trim()).map_err(|_| bad(format!("not an integer: {s:?}"))),
        _ => Err(bad(format!("expected an integer, got {v}"))),
    }
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name).ok_or_else(|| bad(format!("missing field {name:?}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

fn rational_parts(num: &Value, den: &Value) -> Result<Rational> {
    let (n, d) = (int_from_json(num)?, int_from_json(den)?);
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

pub fn gauss_to_json(c: &GaussRational) -> Value {
    json!({
        "re_num": int_to_json(c.re.numer()),
        "re_den": int_to_json(c.re.denom()),
        "im_num": int_to_json(c.im.numer()),
        "im_den": int_to_json(c.im.denom()),
    })
}

pub fn gauss_from_json(v: &Value) -> Result<GaussRational> {
    Ok(GaussRational::new(
        rational_parts(field(v, "re_num")?, field(v, "re_den")?)?,
        rational_parts(field(v, "im_num")?, field(v, "im_den")?)?,
    ))
}

/// `[{h_power, re_num, re_den, im_num, im_den}]`, zero coefficients omitted.
pub fn series_to_json(s: &HSeries) -> Value {
    let items: Vec<Value> = s
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let mut obj = gauss_to_json(c);
            obj.as_object_mut().expect("object").insert("h_power".into(), json!(k));
            obj
        })
        .collect();
    Value::Array(items)
}

pub fn series_from_json(v: &Value, order: usize) -> Result<HSeries> {
    let mut coeffs = vec![GaussRational::zero(); order + 1];
    for item in array(v, "series")? {
        let k = field(item, "h_power")?.as_u64().ok_or_else(|| bad("h_power must be a nonnegative integer"))? as usize;
        if k > order {
            continue;
        }
        coeffs[k] += &gauss_from_json(item)?;
    }
    Ok(HSeries::from_coeffs(coeffs, order))
}

fn generator_to_json(g: Generator) -> Value {
    serde_json::to_value(g).expect("generator serializes")
}

/// A monomial as the product of its generators.
fn word_element(alg: &Arc<Algebra>, word: &[Value], order: usize) -> Result<AlgebraElement> {
    let mut acc = AlgebraElement::one(alg, order);
    for g in word {
        let g: Generator = serde_json::from_value(g.clone()).map_err(|e| bad(format!("generator descriptor: {e}")))?;
        let x = match g {
            Generator::Momentum(mu) if mu < alg.dim() => AlgebraElement::momentum(alg, mu, order),
            Generator::Rotation(mu, nu) if mu < alg.dim() && nu < alg.dim() => {
                AlgebraElement::rotation(alg, mu, nu, order)
            }
            _ => return Err(Error::IndexOutOfRange(format!("{g} in dimension {}", alg.dim()))),
        };
        acc = &acc * &x;
    }
    Ok(acc)
}

fn monomial_to_json(alg: &Algebra, m: &Monomial) -> Value {
    Value::Array(m.iter().map(|&x| generator_to_json(alg.generator(x))).collect())
}

/// `{terms: [{monomial: [descriptors], coeff}]}`.
pub fn algebra_to_json(x: &AlgebraElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(m, c)| json!({"monomial": monomial_to_json(x.algebra(), m), "coeff": series_to_json(c)}))
        .collect();
    json!({ "terms": terms })
}

/// Monomials need not be in PBW order; they are multiplied out.
pub fn algebra_from_json(alg: &Arc<Algebra>, order: usize, v: &Value) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero(alg, order);
    for t in array(field(v, "terms")?, "terms")? {
        let word = word_element(alg, array(field(t, "monomial")?, "monomial")?, order)?;
        out = &out + &word.scale_series(&series_from_json(field(t, "coeff")?, order)?);
    }
    Ok(out)
}

/// `{legs, terms: [{monomials: [[descriptors], …], coeff}]}`.
pub fn tensor_to_json(t: &TensorElement) -> Value {
    let terms: Vec<Value> = t
        .terms()
        .map(|(k, c)| {
            let legs: Vec<Value> = k.iter().map(|m| monomial_to_json(t.algebra(), m)).collect();
            json!({"monomials": legs, "coeff": series_to_json(c)})
        })
        .collect();
    json!({"legs": t.legs(), "terms": terms})
}

pub fn tensor_from_json(alg: &Arc<Algebra>, order: usize, v: &Value) -> Result<TensorElement> {
    let legs = field(v, "legs")?.as_u64().ok_or_else(|| bad("legs must be an integer"))? as usize;
    let mut out = TensorElement::zero(alg, legs, order);
    for t in array(field(v, "terms")?, "terms")? {
        let words = array(field(t, "monomials")?, "monomials")?;
        if words.len() != legs {
            return Err(Error::LegMismatch(words.len(), legs));
        }
        let factors: Vec<AlgebraElement> =
            words.iter().map(|w| word_element(alg, array(w, "monomial")?, order)).collect::<Result<_>>()?;
        let refs: Vec<&AlgebraElement> = factors.iter().collect();
        let term = if legs == 0 { TensorElement::one(alg, 0, order) } else { TensorElement::from_legs(&refs)? };
        out = &out + &term.scale_series(&series_from_json(field(t, "coeff")?, order)?);
    }
    Ok(out)
}

/// `{degree, terms: [{generators: [descriptors], coeff}]}` with increasing
/// generator indices.
pub fn wedge_to_json(w: &WedgeElement) -> Value {
    let alg = w.algebra();
    let terms: Vec<Value> = w
        .terms()
        .map(|(k, c)| {
            let gens: Vec<Value> = k.iter().map(|&x| generator_to_json(alg.generator(x))).collect();
            json!({"generators": gens, "coeff": gauss_to_json(c)})
        })
        .collect();
    json!({"degree": w.degree(), "terms": terms})
}

pub fn wedge_from_json(alg: &Arc<Algebra>, v: &Value) -> Result<WedgeElement> {
    let degree = field(v, "degree")?.as_u64().ok_or_else(|| bad("degree must be an integer"))? as usize;
    let mut out = WedgeElement::zero(alg, degree)?;
    for t in array(field(v, "terms")?, "terms")? {
        let gens = array(field(t, "generators")?, "generators")?;
        if gens.len() != degree {
            return Err(bad(format!("expected {degree} generators per term")));
        }
        let mut idx = Vec::new();
        let mut sign = GaussRational::one();
        for g in gens {
            let g: Generator = serde_json::from_value(g.clone()).map_err(|e| bad(format!("generator descriptor: {e}")))?;
            let (x, s) = match g {
                Generator::Momentum(_) => (alg.basis().index(g)?, 1),
                Generator::Rotation(mu, nu) if mu < alg.dim() && nu < alg.dim() => alg
                    .basis()
                    .rotation(mu, nu)
                    .ok_or_else(|| bad(format!("M_{mu}{nu} is not a generator")))?,
                _ => return Err(Error::IndexOutOfRange(format!("{g} in dimension {}", alg.dim()))),
            };
            if s < 0 {
                sign = -sign;
            }
            idx.push(x);
        }
        out.add(&idx, &(&sign * &gauss_from_json(field(t, "coeff")?)?));
    }
    Ok(out)
}

/// `{terms: [{monomial: [{"x": μ}, …], coeff}]}`.
pub fn minkowski_to_json(x: &MinkowskiElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(m, c)| {
            let mono: Vec<Value> = m.iter().map(|&mu| json!({ "x": mu })).collect();
            json!({"monomial": mono, "coeff": series_to_json(c)})
        })
        .collect();
    json!({ "terms": terms })
}

pub fn minkowski_from_json(space: &Arc<MinkowskiSpace>, order: usize, v: &Value) -> Result<MinkowskiElement> {
    let mut out = MinkowskiElement::zero(space, order);
    for t in array(field(v, "terms")?, "terms")? {
        let mut word = Vec::new();
        for x in array(field(t, "monomial")?, "monomial")? {
            let mu = field(x, "x")?.as_u64().ok_or_else(|| bad("coordinate index must be an integer"))? as usize;
            if mu >= space.dim() {
                return Err(Error::IndexOutOfRange(format!("x^{mu} in dimension {}", space.dim())));
            }
            word.push(mu as u8);
        }
        let w = MinkowskiElement::word(space, &word, order);
        out = &out + &w.scale_series(&series_from_json(field(t, "coeff")?, order)?);
    }
    Ok(out)
}

pub fn orbit_to_json(o: &OrbitClassification) -> Value {
    serde_json::to_value(o).expect("orbit serializes")
}

pub fn orbit_from_json(v: &Value) -> Result<OrbitClassification> {
    serde_json::from_value(v.clone()).map_err(|e| bad(format!("orbit classification: {e}")))
}

pub fn matrix_to_json(m: &RatMatrix) -> Value {
    Value::Array(m.iter().map(|r| Value::Array(r.iter().map(|x| json!(format_rational(x))).collect())).collect())
}

pub fn matrix_from_json(v: &Value) -> Result<RatMatrix> {
    array(v, "matrix")?
        .iter()
        .map(|r| array(r, "matrix row")?.iter().map(rational_from_json).collect())
        .collect()
}

/// A rational given as `"num/den"`, `"n"` or a JSON integer.
pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(_) => Ok(Rational::from_integer(int_from_json(v)?)),
        _ => Err(bad(format!("expected a rational, got {v}"))),
    }
}

/// `{kind, matrix, metric}`; `matrix` holds the new basis vectors as columns.
pub fn basis_to_json(b: &BasisChange) -> Value {
    json!({
        "kind": serde_json::to_value(b.kind()).expect("kind serializes"),
        "matrix": matrix_to_json(b.matrix()),
        "metric": matrix_to_json(b.target_metric().entries()),
    })
}

pub fn twist_to_json(t: &TwistData) -> Value {
    json!({"F": tensor_to_json(&t.f), "R": tensor_to_json(&t.r)})
}

fn residual_to_json(r: &Residual) -> Value {
    match r {
        Residual::Scalar(s) => json!({ "series": series_to_json(s) }),
        Residual::Algebra(a) => algebra_to_json(a),
        Residual::Tensor(t) => tensor_to_json(t),
        Residual::Wedge(w) => wedge_to_json(w),
        Residual::Minkowski(m) => minkowski_to_json(m),
        Residual::Message(s) => json!({ "message": s }),
    }
}

fn check_to_json(c: &CheckResult) -> Value {
    let mut obj = Map::new();
    obj.insert("name".into(), json!(c.name));
    obj.insert("passed".into(), json!(c.passed));
    if let Some(r) = &c.residual {
        obj.insert("residual".into(), residual_to_json(r));
    }
    if let Some(g) = &c.generator {
        obj.insert("generator".into(), json!(g));
    }
    Value::Object(obj)
}

/// `{suite, elapsed_ms, checks: [{name, passed, residual?, generator?}]}`.
pub fn report_to_json(r: &VerificationReport) -> Value {
    json!({
        "suite": r.suite,
        "elapsed_ms": r.elapsed.as_millis() as u64,
        "checks": r.checks.iter().map(check_to_json).collect::<Vec<_>>(),
    })
}
