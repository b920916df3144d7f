//! Antisymmetric 2- and 3-tensors over `iso(g)`: the r-matrix, the invariant
//! element and the Schouten square.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use smallvec::SmallVec;

use crate::algebra::{Algebra, AlgebraElement, VectorTau};
use crate::error::{Error, Result};
use crate::lie::{GenIndex, LieVector};
use crate::scalar::GaussRational;
use crate::tensor::{TensorElement, TensorKey};
use crate::pbw::Monomial;
use crate::report::{CheckResult, Residual, VerificationReport};

pub type WedgeKey = SmallVec<[GenIndex; 3]>;

/// `Σ c · x₁∧…∧x_k` stored on strictly increasing index tuples.
#[derive(Clone)]
pub struct WedgeElement {
    alg: Arc<Algebra>,
    degree: usize,
    terms: BTreeMap<WedgeKey, GaussRational>,
}

/// Sort `idx` in place and return the permutation sign, or 0 on a repeat.
fn sort_with_sign(idx: &mut [GenIndex]) -> i64 {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        0
    } else {
        sign
    }
}

// All permutations of 0..k with their signs (k ≤ 3).
fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    match k {
        1 => vec![(vec![0], 1)],
        2 => vec![(vec![0, 1], 1), (vec![1, 0], -1)],
        3 => vec![
            (vec![0, 1, 2], 1),
            (vec![1, 2, 0], 1),
            (vec![2, 0, 1], 1),
            (vec![1, 0, 2], -1),
            (vec![0, 2, 1], -1),
            (vec![2, 1, 0], -1),
        ],
        _ => unreachable!("wedge degree is 2 or 3"),
    }
}

impl WedgeElement {
    pub fn zero(alg: &Arc<Algebra>, degree: usize) -> Result<Self> {
        if !(2..=3).contains(&degree) {
            return Err(Error::Invalid(format!("wedge degree must be 2 or 3, got {degree}")));
        }
        Ok(WedgeElement { alg: alg.clone(), degree, terms: BTreeMap::new() })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WedgeKey, &GaussRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `c · x_{i₁}∧…∧x_{i_k}` for indices in any order.
    pub fn add(&mut self, indices: &[GenIndex], c: &GaussRational) {
        assert_eq!(indices.len(), self.degree);
        let mut key: WedgeKey = SmallVec::from_slice(indices);
        let s = sort_with_sign(&mut key);
        if s == 0 || c.is_zero() {
            return;
        }
        let c = if s < 0 { -c } else { c.clone() };
        let e = self.terms.entry(key.clone()).or_insert_with(GaussRational::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// The signed coefficient at any ordering of the indices.
    pub fn get(&self, indices: &[GenIndex]) -> GaussRational {
        let mut key: WedgeKey = SmallVec::from_slice(indices);
        let s = sort_with_sign(&mut key);
        if s == 0 {
            return GaussRational::zero();
        }
        let c = self.terms.get(&key).cloned().unwrap_or_else(GaussRational::zero);
        if s < 0 {
            -c
        } else {
            c
        }
    }

    /// Multilinear wedge of Lie vectors.
    pub fn wedge(alg: &Arc<Algebra>, factors: &[&LieVector]) -> Result<Self> {
        let mut w = Self::zero(alg, factors.len())?;
        w.add_wedge(factors, &GaussRational::one());
        Ok(w)
    }

    fn add_wedge(&mut self, factors: &[&LieVector], c: &GaussRational) {
        let mut partial: Vec<(Vec<GenIndex>, GaussRational)> = vec![(Vec::new(), c.clone())];
        for f in factors {
            let mut next = Vec::new();
            for (idx, c) in &partial {
                for (g, cg) in f.iter() {
                    let mut i = idx.clone();
                    i.push(*g);
                    next.push((i, c * cg));
                }
            }
            partial = next;
        }
        for (idx, c) in partial {
            self.add(&idx, &c);
        }
    }

    pub fn scale(&self, c: &GaussRational) -> WedgeElement {
        let mut out = WedgeElement { alg: self.alg.clone(), degree: self.degree, terms: BTreeMap::new() };
        for (k, v) in &self.terms {
            out.add(k, &(v * c));
        }
        out
    }

    pub fn checked_add(&self, other: &WedgeElement) -> Result<WedgeElement> {
        if !self.alg.same_as(&other.alg) {
            return Err(Error::ContextMismatch);
        }
        if self.degree != other.degree {
            return Err(Error::LegMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add(k, v);
        }
        Ok(out)
    }

    /// Full antisymmetrized tensor: `x∧y = x⊗y − y⊗x`, and likewise with
    /// signed permutations in degree 3.
    pub fn to_tensor(&self, order: usize) -> TensorElement {
        let mut t = TensorElement::zero(&self.alg, self.degree, order);
        for (k, c) in &self.terms {
            for (perm, s) in permutations(self.degree) {
                let key: TensorKey = perm.iter().map(|&p| Monomial::from_slice(&[k[p]])).collect();
                let c = if s < 0 { -c } else { c.clone() };
                t.add_term(key, &crate::series::HSeries::constant(c, order));
            }
        }
        t
    }

    /// Recover a wedge from a tensor whose legs are single generators and
    /// which is fully antisymmetric; anything else is rejected.
    pub fn from_antisymmetric_tensor(t: &TensorElement) -> Result<WedgeElement> {
        let mut w = WedgeElement::zero(t.algebra(), t.legs())?;
        for (k, c) in t.terms() {
            if k.iter().any(|m| m.len() != 1) || c.valuation() != Some(0) || c.coeffs()[1..].iter().any(|x| !x.is_zero())
            {
                return Err(Error::Invalid("tensor is not Lie-algebra valued".into()));
            }
            let idx: Vec<GenIndex> = k.iter().map(|m| m[0]).collect();
            if idx.windows(2).all(|p| p[0] < p[1]) {
                w.add(&idx, c.coeff(0));
            }
        }
        if w.to_tensor(t.order()) != *t {
            return Err(Error::Invalid("tensor is not antisymmetric".into()));
        }
        Ok(w)
    }

    pub fn to_algebra_string(&self) -> String {
        let basis = self.alg.basis();
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(k, c)| {
                let gens: Vec<String> = k.iter().map(|&g| basis.generator(g).to_string()).collect();
                format!("({c}) {}", gens.join("∧"))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl PartialEq for WedgeElement {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg) && self.degree == other.degree && self.terms == other.terms
    }
}

impl fmt::Display for WedgeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_algebra_string())
    }
}

impl fmt::Debug for WedgeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn momentum_up(alg: &Arc<Algebra>, mu: usize) -> LieVector {
    let g = alg.metric();
    (0..alg.dim())
        .filter(|&nu| !num_traits::Zero::is_zero(g.g_inv(mu, nu)))
        .map(|nu| (alg.basis().momentum(nu), GaussRational::real(g.g_inv(mu, nu).clone())))
        .collect()
}

fn rotation_vec(alg: &Arc<Algebra>, mu: usize, nu: usize) -> LieVector {
    match alg.basis().rotation(mu, nu) {
        Some((idx, s)) => vec![(idx, GaussRational::from_int(s))],
        None => Vec::new(),
    }
}

/// `r_τ = τ^α M_{αμ} ∧ P^μ`.
pub fn r_matrix(alg: &Arc<Algebra>, tau: &VectorTau) -> Result<WedgeElement> {
    if tau.is_zero() {
        return Err(Error::ZeroTau);
    }
    let d = alg.dim();
    let mut r = WedgeElement::zero(alg, 2)?;
    for a in 0..d {
        if num_traits::Zero::is_zero(tau.up(a)) {
            continue;
        }
        let c = GaussRational::real(tau.up(a).clone());
        for mu in 0..d {
            r.add_wedge(&[&rotation_vec(alg, a, mu), &momentum_up(alg, mu)], &c);
        }
    }
    Ok(r)
}

/// `Ω = M_{μν} ∧ P^μ ∧ P^ν`.
pub fn omega(alg: &Arc<Algebra>) -> WedgeElement {
    let d = alg.dim();
    let mut w = WedgeElement::zero(alg, 3).expect("degree 3");
    for mu in 0..d {
        for nu in 0..d {
            w.add_wedge(
                &[&rotation_vec(alg, mu, nu), &momentum_up(alg, mu), &momentum_up(alg, nu)],
                &GaussRational::one(),
            );
        }
    }
    w
}

/// `[r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃]` for `r` given as a full 2-tensor
/// of generators, as a 3-tensor of generators.
pub fn classical_yang_baxter(r: &WedgeElement) -> Result<TensorElement> {
    if r.degree != 2 {
        return Err(Error::LegMismatch(r.degree, 2));
    }
    let alg = &r.alg;
    let table = alg.structure();
    // Full tensor components (a, b, c) of r.
    let mut comps: Vec<(GenIndex, GenIndex, GaussRational)> = Vec::new();
    for (k, c) in &r.terms {
        comps.push((k[0], k[1], c.clone()));
        comps.push((k[1], k[0], -c));
    }
    let mut acc: BTreeMap<[GenIndex; 3], GaussRational> = BTreeMap::new();
    let mut put = |key: [GenIndex; 3], c: GaussRational| {
        let e = acc.entry(key).or_insert_with(GaussRational::zero);
        *e += &c;
    };
    for (a, b, c) in &comps {
        for (a2, b2, c2) in &comps {
            let cc = c * c2;
            // [r12, r13] = [a, a2] ⊗ b ⊗ b2
            for (z, cz) in table.get(*a, *a2) {
                put([*z, *b, *b2], &cc * cz);
            }
            // [r12, r23] = a ⊗ [b, a2] ⊗ b2
            for (z, cz) in table.get(*b, *a2) {
                put([*a, *z, *b2], &cc * cz);
            }
            // [r13, r23] = a ⊗ a2 ⊗ [b, b2]
            for (z, cz) in table.get(*b, *b2) {
                put([*a, *a2, *z], &cc * cz);
            }
        }
    }
    let order = 0;
    let mut t = TensorElement::zero(alg, 3, order);
    for (k, c) in acc {
        let key: TensorKey = k.iter().map(|&g| Monomial::from_slice(&[g])).collect();
        t.add_term(key, &crate::series::HSeries::constant(c, order));
    }
    Ok(t)
}

/// Normalization of the Schouten square relative to the classical
/// Yang–Baxter tensor: `[[r, r]] = −2i · CYB(r)`. The `i` compensates the
/// Hermitian structure constants; the factor is fixed so that the time-like
/// Lorentzian r-matrix squares to `+Ω`.
pub fn schouten_factor() -> GaussRational {
    GaussRational::new(crate::scalar::int(0), crate::scalar::int(-2))
}

/// `[[r, r]]` as a degree-3 wedge.
pub fn schouten_square(r: &WedgeElement) -> Result<WedgeElement> {
    let cyb = classical_yang_baxter(r)?;
    let w = WedgeElement::from_antisymmetric_tensor(&cyb)
        .map_err(|e| Error::Defect(format!("Yang–Baxter tensor of an antisymmetric r: {e}")))?;
    Ok(w.scale(&schouten_factor()))
}

impl WedgeElement {
    /// The adjoint action `ad_x` extended as a derivation.
    pub fn ad(&self, x: GenIndex) -> WedgeElement {
        let table = self.alg.structure();
        let mut out = WedgeElement::zero(&self.alg, self.degree).expect("same degree");
        for (k, c) in &self.terms {
            for pos in 0..k.len() {
                for (z, cz) in table.get(x, k[pos]) {
                    let mut key = k.clone();
                    key[pos] = *z;
                    out.add(&key, &(c * cz));
                }
            }
        }
        out
    }
}

/// `[[r_τ, r_τ]] = −τ² Ω` together with the invariance of `Ω`.
pub fn verify_schouten(alg: &Arc<Algebra>, tau: &VectorTau) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("schouten");
    let r = r_matrix(alg, tau)?;
    let w = omega(alg);
    let lhs = schouten_square(&r)?;
    let rhs = w.scale(&GaussRational::real(-tau.square()));
    let diff = lhs.checked_add(&rhs.scale(&GaussRational::from_int(-1)))?;
    report.push(if diff.is_zero() {
        CheckResult::pass("schouten-identity")
    } else {
        CheckResult::fail("schouten-identity", None, Residual::Wedge(diff))
    });
    let inv = (0..alg.basis().len() as GenIndex).map(|x| {
        let a = w.ad(x);
        let name = alg.generator(x).to_string();
        if a.is_zero() {
            CheckResult::pass("omega-invariant")
        } else {
            CheckResult::fail("omega-invariant", Some(name), Residual::Wedge(a))
        }
    });
    report.push(CheckResult::all("omega-invariant", inv));
    let yb = if tau.square_sign() == 0 { lhs.is_zero() } else { !lhs.is_zero() };
    report.push(if yb {
        CheckResult::pass("yang-baxter-type")
    } else {
        CheckResult::fail("yang-baxter-type", None, Residual::Wedge(lhs))
    });
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Build the Lie-algebra element `Σ c x` as a degree-1 algebra element.
pub fn lie_element(alg: &Arc<Algebra>, v: &LieVector, order: usize) -> AlgebraElement {
    AlgebraElement::from_lie(alg, v, order)
}
