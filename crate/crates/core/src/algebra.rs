//! The enveloping algebra `U(iso(g))[[h]]` truncated at `h^{N+1}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lie::{GenIndex, Generator, LieBasis, StructurePerturbation, StructureTable};
use crate::metric::Metric;
use crate::pbw::{Monomial, PbwEngine};
use crate::scalar::{GaussRational, Rational};
use crate::series::HSeries;

/// A metric together with its structure constants and normal-ordering engine.
/// Shared by every element living in `U(iso(g))`.
#[derive(Debug)]
pub struct Algebra {
    metric: Metric,
    table: StructureTable,
    perturbation: Option<StructurePerturbation>,
    pbw: PbwEngine,
}

impl Algebra {
    pub fn new(metric: Metric) -> Arc<Algebra> {
        Self::build(metric, None).expect("unperturbed structure table always builds")
    }

    /// An algebra whose structure constants have been deliberately altered.
    pub fn perturbed(metric: Metric, p: StructurePerturbation) -> Result<Arc<Algebra>> {
        Self::build(metric, Some(p))
    }

    fn build(metric: Metric, perturbation: Option<StructurePerturbation>) -> Result<Arc<Algebra>> {
        let table = StructureTable::new(&metric, perturbation.as_ref())?;
        let pbw = PbwEngine::new(table.basis().len(), |y, x| {
            table.get(y, x).iter().map(|(z, c)| (*z, 0, c.clone())).collect()
        });
        Ok(Arc::new(Algebra { metric, table, perturbation, pbw }))
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    pub fn basis(&self) -> &LieBasis {
        self.table.basis()
    }

    pub fn structure(&self) -> &StructureTable {
        &self.table
    }

    pub(crate) fn pbw(&self) -> &PbwEngine {
        &self.pbw
    }

    pub fn is_perturbed(&self) -> bool {
        self.perturbation.is_some()
    }

    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || (self.metric == other.metric && self.perturbation == other.perturbation)
    }

    pub fn generator(&self, idx: GenIndex) -> Generator {
        self.basis().generator(idx)
    }
}

/// An element of `U(iso(g))[[h]] / (h^{N+1})`: a sparse map from PBW-ordered
/// monomials to truncated series. Zero coefficients are never stored.
#[derive(Clone)]
pub struct AlgebraElement {
    alg: Arc<Algebra>,
    order: usize,
    terms: BTreeMap<Monomial, HSeries>,
}

impl AlgebraElement {
    pub fn zero(alg: &Arc<Algebra>, order: usize) -> Self {
        AlgebraElement { alg: alg.clone(), order, terms: BTreeMap::new() }
    }

    pub fn one(alg: &Arc<Algebra>, order: usize) -> Self {
        Self::scalar(alg, HSeries::one(order))
    }

    pub fn scalar(alg: &Arc<Algebra>, s: HSeries) -> Self {
        let order = s.order();
        let mut e = Self::zero(alg, order);
        e.add_term(Monomial::new(), &s);
        e
    }

    pub fn constant(alg: &Arc<Algebra>, c: GaussRational, order: usize) -> Self {
        Self::scalar(alg, HSeries::constant(c, order))
    }

    pub fn generator(alg: &Arc<Algebra>, g: Generator, order: usize) -> Result<Self> {
        let idx = alg.basis().index(g)?;
        Ok(Self::from_index(alg, idx, order))
    }

    pub(crate) fn from_index(alg: &Arc<Algebra>, idx: GenIndex, order: usize) -> Self {
        Self::from_monomial(alg, Monomial::from_slice(&[idx]), HSeries::one(order))
    }

    pub(crate) fn from_monomial(alg: &Arc<Algebra>, m: Monomial, c: HSeries) -> Self {
        let mut e = Self::zero(alg, c.order());
        e.add_term(m, &c);
        e
    }

    /// `P_μ`.
    pub fn momentum(alg: &Arc<Algebra>, mu: usize, order: usize) -> Self {
        Self::from_index(alg, alg.basis().momentum(mu), order)
    }

    /// `M_{μν}` for arbitrary indices (zero when `μ = ν`).
    pub fn rotation(alg: &Arc<Algebra>, mu: usize, nu: usize, order: usize) -> Self {
        match alg.basis().rotation(mu, nu) {
            Some((idx, s)) => Self::from_index(alg, idx, order).scale(&GaussRational::from_int(s)),
            None => Self::zero(alg, order),
        }
    }

    /// Linear combination of generators.
    pub fn from_lie(alg: &Arc<Algebra>, v: &[(GenIndex, GaussRational)], order: usize) -> Self {
        let mut e = Self::zero(alg, order);
        for (idx, c) in v {
            e.add_term(Monomial::from_slice(&[*idx]), &HSeries::constant(c.clone(), order));
        }
        e
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &HSeries)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &[GenIndex]) -> HSeries {
        self.terms.get(m).cloned().unwrap_or_else(|| HSeries::zero(self.order))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the empty monomial, i.e. the classical counit.
    pub fn constant_term(&self) -> HSeries {
        self.coefficient(&[])
    }

    /// Largest monomial degree present.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    /// True when every monomial consists only of momenta.
    pub fn is_momentum_polynomial(&self) -> bool {
        let basis = self.alg.basis();
        self.terms.keys().all(|m| m.iter().all(|&g| basis.generator(g).is_momentum()))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &HSeries) {
        debug_assert_eq!(c.order(), self.order);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                v.add_assign_unchecked(c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// `self += c · h^k · coeff · m`.
    pub(crate) fn add_scaled_term(&mut self, m: &Monomial, coeff: &HSeries, c: &GaussRational, k: usize) {
        if k > self.order {
            return;
        }
        let mut s = HSeries::zero(self.order);
        s.add_scaled_shifted(coeff, c, k);
        if !s.is_zero() {
            self.add_term(m.clone(), &s);
        }
    }

    fn check(&self, other: &AlgebraElement) -> Result<()> {
        if !self.alg.same_as(&other.alg) {
            return Err(Error::ContextMismatch);
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    /// Product reduced to PBW normal form.
    pub fn checked_mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(other)?;
        let n = self.order;
        let mut out = AlgebraElement::zero(&self.alg, n);
        let pbw = self.alg.pbw();
        for (ma, ca) in &self.terms {
            let va = ca.valuation().unwrap_or(n + 1);
            for (mb, cb) in &other.terms {
                if va + cb.valuation().unwrap_or(n + 1) > n {
                    continue;
                }
                let prod = ca.mul_unchecked(cb);
                if prod.is_zero() {
                    continue;
                }
                for (m, k, c) in pbw.mul_mono(ma, mb).iter() {
                    out.add_scaled_term(m, &prod, c, *k as usize);
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &AlgebraElement) -> AlgebraElement {
        &(self * other) - &(other * self)
    }

    pub fn scale(&self, c: &GaussRational) -> AlgebraElement {
        let mut out = AlgebraElement::zero(&self.alg, self.order);
        for (m, s) in &self.terms {
            out.add_term(m.clone(), &s.scale(c));
        }
        out
    }

    pub fn scale_rational(&self, q: &Rational) -> AlgebraElement {
        self.scale(&GaussRational::real(q.clone()))
    }

    pub fn scale_series(&self, s: &HSeries) -> AlgebraElement {
        let mut out = AlgebraElement::zero(&self.alg, self.order);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.mul_unchecked(s));
        }
        out
    }

    /// Multiply by `h^k`.
    pub fn shift_h(&self, k: usize) -> AlgebraElement {
        let mut out = AlgebraElement::zero(&self.alg, self.order);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.shift(k));
        }
        out
    }

    /// Divide by `h^k`; the result lives at order `N - k`.
    pub fn div_h(&self, k: usize) -> Result<AlgebraElement> {
        if k > self.order {
            return Err(Error::NotInvertible(format!("cannot divide order-{} element by h^{k}", self.order)));
        }
        let mut out = AlgebraElement::zero(&self.alg, self.order - k);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.div_h(k)?);
        }
        Ok(out)
    }

    /// Re-truncate (or zero-pad) to another order.
    pub fn with_order(&self, order: usize) -> AlgebraElement {
        let mut out = AlgebraElement::zero(&self.alg, order);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.with_order(order));
        }
        out
    }

    /// The `h^k` part, as an element with `h`-free coefficients.
    pub fn h_coefficient(&self, k: usize) -> AlgebraElement {
        let mut out = AlgebraElement::zero(&self.alg, self.order);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &HSeries::constant(c.coeff(k).clone(), self.order));
        }
        out
    }

    /// Substitute `h → λ h`.
    pub fn rescale_h(&self, lambda: &Rational) -> AlgebraElement {
        let mut out = AlgebraElement::zero(&self.alg, self.order);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.rescale_h(lambda));
        }
        out
    }

    pub fn pow(&self, n: usize) -> AlgebraElement {
        let mut acc = AlgebraElement::one(&self.alg, self.order);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The `h⁰` part of the element, if it is a scalar.
    fn classical_scalar(&self) -> Option<GaussRational> {
        let mut c0 = GaussRational::zero();
        for (m, c) in &self.terms {
            let x = c.coeff(0);
            if x.is_zero() {
                continue;
            }
            if !m.is_empty() {
                return None;
            }
            c0 = x.clone();
        }
        Some(c0)
    }

    /// `Σ_{k=0}^{N} f_k X^k` for `X = O(h)`.
    fn power_series(x: &AlgebraElement, coeffs: impl Fn(usize) -> GaussRational) -> Result<AlgebraElement> {
        match x.classical_scalar() {
            Some(c) if c.is_zero() => {}
            _ => return Err(Error::NotInvertible("series argument must be O(h)".into())),
        }
        let mut acc = AlgebraElement::zero(&x.alg, x.order);
        let mut power = AlgebraElement::one(&x.alg, x.order);
        for k in 0..=x.order {
            let f = coeffs(k);
            if !f.is_zero() {
                acc = &acc + &power.scale(&f);
            }
            power = &power * x;
        }
        Ok(acc)
    }

    /// Inverse for elements whose `h⁰` part is a nonzero scalar:
    /// `(c(1 + X))⁻¹ = c⁻¹ Σ (−X)^k`.
    pub fn invert(&self) -> Result<AlgebraElement> {
        let c = self
            .classical_scalar()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::NotInvertible("h⁰ part is not an invertible scalar".into()))?;
        let c_inv = c.inv()?;
        let x = &self.scale(&c_inv) - &AlgebraElement::one(&self.alg, self.order);
        let sign = |k: usize| GaussRational::from_int(if k % 2 == 0 { 1 } else { -1 });
        Ok(Self::power_series(&x, sign)?.scale(&c_inv))
    }

    /// `exp(X)` for `X = O(h)`.
    pub fn exp(&self) -> Result<AlgebraElement> {
        Self::power_series(self, |k| GaussRational::from_ratio(1, factorial(k)))
    }

    /// `ln(self)` for `self = 1 + O(h)`.
    pub fn ln(&self) -> Result<AlgebraElement> {
        let x = self - &AlgebraElement::one(&self.alg, self.order);
        Self::power_series(&x, |k| {
            if k == 0 {
                GaussRational::zero()
            } else {
                GaussRational::from_ratio(if k % 2 == 1 { 1 } else { -1 }, k as i64)
            }
        })
    }

    /// The first nonzero term in PBW order, for residual reports.
    pub fn leading_term(&self) -> Option<(Monomial, HSeries)> {
        self.terms.iter().next().map(|(m, c)| (m.clone(), c.clone()))
    }

    /// Apply a linear map defined on monomials.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(&self.alg, self.order);
        for (m, c) in &self.terms {
            let img = f(m);
            for (m2, c2) in &img.terms {
                out.add_term(m2.clone(), &c.mul_unchecked(c2));
            }
        }
        out
    }

    /// The antilinear anti-involution fixing every generator: coefficients are
    /// conjugated and each monomial is reversed, then re-normal-ordered.
    pub fn star(&self) -> AlgebraElement {
        let pbw = self.alg.pbw();
        let mut out = AlgebraElement::zero(&self.alg, self.order);
        for (m, c) in &self.terms {
            let rev: Vec<GenIndex> = m.iter().rev().copied().collect();
            let cc = c.conj();
            for (m2, k, c2) in pbw.normal_order(&rev) {
                out.add_scaled_term(&m2, &cc, &c2, k as usize);
            }
        }
        out
    }

    /// Render a monomial like `M_01 P_0^2`.
    pub fn monomial_string(&self, m: &[GenIndex]) -> String {
        monomial_string(self.alg.basis(), m)
    }
}

pub(crate) fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

pub fn monomial_string(basis: &LieBasis, m: &[GenIndex]) -> String {
    if m.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < m.len() {
        let mut j = i;
        while j < m.len() && m[j] == m[i] {
            j += 1;
        }
        let g = basis.generator(m[i]);
        if j - i == 1 {
            parts.push(g.to_string());
        } else {
            parts.push(format!("{g}^{}", j - i));
        }
        i = j;
    }
    parts.join(" ")
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg) && self.order == other.order && self.terms == other.terms
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({}) {}", crate::render::series_inline(c), self.monomial_string(m)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Operator forms panic on a context/order mismatch; use `checked_*` to get an error.
impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_add(rhs).expect("algebra element mismatch")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_sub(rhs).expect("algebra element mismatch")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_mul(rhs).expect("algebra element mismatch")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&GaussRational::from_int(-1))
    }
}

/// The Lie bracket of two generators as a degree-≤1 element.
pub fn bracket_element(alg: &Arc<Algebra>, x: Generator, y: Generator, order: usize) -> Result<AlgebraElement> {
    let basis = alg.basis();
    let (ix, iy) = (basis.index(x)?, basis.index(y)?);
    Ok(AlgebraElement::from_lie(alg, alg.structure().get(ix, iy), order))
}

/// The quadratic Casimir `C = g^{μν} P_μ P_ν`.
pub fn casimir(alg: &Arc<Algebra>, order: usize) -> AlgebraElement {
    let g = alg.metric();
    let d = alg.dim();
    let mut c = AlgebraElement::zero(alg, order);
    for mu in 0..d {
        for nu in 0..d {
            let gi = g.g_inv(mu, nu);
            if gi.is_zero_value() {
                continue;
            }
            let term = &AlgebraElement::momentum(alg, mu, order) * &AlgebraElement::momentum(alg, nu, order);
            c = &c + &term.scale_rational(gi);
        }
    }
    c
}

/// The deformation vector `τ^μ` with cached `τ_μ = g_{μν}τ^ν` and `τ² = g(τ, τ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorTau {
    components: Vec<Rational>,
    covariant: Vec<Rational>,
    square: Rational,
}

impl VectorTau {
    pub fn new(g: &Metric, components: Vec<Rational>) -> Result<VectorTau> {
        if components.len() != g.dim() {
            return Err(Error::IndexOutOfRange(format!(
                "τ has {} components, metric has dimension {}",
                components.len(),
                g.dim()
            )));
        }
        let covariant = g.lower(&components);
        let square = g.inner(&components, &components);
        Ok(VectorTau { components, covariant, square })
    }

    pub fn from_ints(g: &Metric, c: &[i64]) -> Result<VectorTau> {
        Self::new(g, c.iter().map(|&x| crate::scalar::int(x)).collect())
    }

    pub fn components(&self) -> &[Rational] {
        &self.components
    }

    /// `τ^μ`.
    pub fn up(&self, mu: usize) -> &Rational {
        &self.components[mu]
    }

    /// `τ_μ`.
    pub fn down(&self, mu: usize) -> &Rational {
        &self.covariant[mu]
    }

    pub fn square(&self) -> &Rational {
        &self.square
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero_value())
    }

    /// Sign of `τ²` as −1, 0 or 1.
    pub fn square_sign(&self) -> i8 {
        use num_traits::Signed;
        if self.square.is_positive() {
            1
        } else if self.square.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn scaled(&self, g: &Metric, s: &Rational) -> VectorTau {
        VectorTau::new(g, self.components.iter().map(|c| c * s).collect()).expect("same dimension")
    }
}

/// `P_τ = τ^μ P_μ` and the family `M_{τλ} = τ^α M_{αλ}`, `λ = 0..D−1`.
pub fn contract_tau(alg: &Arc<Algebra>, tau: &VectorTau, order: usize) -> (AlgebraElement, Vec<AlgebraElement>) {
    let d = alg.dim();
    let mut p_tau = AlgebraElement::zero(alg, order);
    for mu in 0..d {
        if !tau.up(mu).is_zero_value() {
            p_tau = &p_tau + &AlgebraElement::momentum(alg, mu, order).scale_rational(tau.up(mu));
        }
    }
    let m_tau = (0..d)
        .map(|lam| {
            let mut m = AlgebraElement::zero(alg, order);
            for a in 0..d {
                if !tau.up(a).is_zero_value() {
                    m = &m + &AlgebraElement::rotation(alg, a, lam, order).scale_rational(tau.up(a));
                }
            }
            m
        })
        .collect();
    (p_tau, m_tau)
}

/// `P^μ = g^{μν} P_ν`.
pub fn raised_momentum(alg: &Arc<Algebra>, mu: usize, order: usize) -> AlgebraElement {
    let mut p = AlgebraElement::zero(alg, order);
    for nu in 0..alg.dim() {
        let gi = alg.metric().g_inv(mu, nu);
        if !gi.is_zero_value() {
            p = &p + &AlgebraElement::momentum(alg, nu, order).scale_rational(gi);
        }
    }
    p
}

trait IsZeroValue {
    fn is_zero_value(&self) -> bool;
}

impl IsZeroValue for Rational {
    fn is_zero_value(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn lorentz() -> Arc<Algebra> {
        Algebra::new(Metric::minkowski(4))
    }

    #[test]
    fn momenta_commute_under_multiplication() {
        let a = lorentz();
        let p0 = AlgebraElement::momentum(&a, 0, 2);
        let p1 = AlgebraElement::momentum(&a, 1, 2);
        assert_eq!(&p1 * &p0, &p0 * &p1);
        assert_eq!((&p1 * &p0).num_terms(), 1);
    }

    #[test]
    fn single_rewrite() {
        // P_0 · M_01 = M_01 P_0 − [M_01, P_0] = M_01 P_0 − i P_1.
        let a = lorentz();
        let p0 = AlgebraElement::momentum(&a, 0, 2);
        let p1 = AlgebraElement::momentum(&a, 1, 2);
        let m01 = AlgebraElement::rotation(&a, 0, 1, 2);
        let want = &(&m01 * &p0) - &p1.scale(&GaussRational::i());
        assert_eq!(&p0 * &m01, want);
    }

    #[test]
    fn unit_is_neutral() {
        let a = lorentz();
        let x = &AlgebraElement::rotation(&a, 1, 2, 2) * &AlgebraElement::momentum(&a, 3, 2);
        let one = AlgebraElement::one(&a, 2);
        assert_eq!(&one * &x, x);
        assert_eq!(&x * &one, x);
    }

    #[test]
    fn casimir_examples() {
        let a = lorentz();
        let c = casimir(&a, 2);
        let p = |m| AlgebraElement::momentum(&a, m, 2);
        let want = &(&(&(&p(1) * &p(1)) + &(&p(2) * &p(2))) + &(&p(3) * &p(3))) - &(&p(0) * &p(0));
        assert_eq!(c, want);

        let hyper = Algebra::new(Metric::new(vec![vec![int(0), int(1)], vec![int(1), int(0)]]).unwrap());
        let c2 = casimir(&hyper, 2);
        let q = |m| AlgebraElement::momentum(&hyper, m, 2);
        assert_eq!(c2, (&q(0) * &q(1)).scale(&GaussRational::from_int(2)));
    }

    #[test]
    fn casimir_is_central() {
        let a = Algebra::new(Metric::minkowski(3));
        let c = casimir(&a, 1);
        for g in a.basis().generators().to_vec() {
            let x = AlgebraElement::generator(&a, g, 1).unwrap();
            assert_eq!(&c * &x, &x * &c, "C fails to commute with {g}");
        }
    }

    #[test]
    fn mismatched_orders_error() {
        let a = lorentz();
        let x = AlgebraElement::momentum(&a, 0, 2);
        let y = AlgebraElement::momentum(&a, 0, 3);
        assert_eq!(x.checked_mul(&y).unwrap_err(), Error::OrderMismatch(2, 3));
        let b = Algebra::new(Metric::minkowski(3));
        let z = AlgebraElement::momentum(&b, 0, 2);
        assert_eq!(x.checked_add(&z).unwrap_err(), Error::ContextMismatch);
    }

    #[test]
    fn series_functions() {
        let a = lorentz();
        let x = AlgebraElement::momentum(&a, 0, 4).shift_h(1);
        let e = x.exp().unwrap();
        assert_eq!(e.ln().unwrap(), x);
        let one = AlgebraElement::one(&a, 4);
        let y = &one + &x;
        assert_eq!(&y * &y.invert().unwrap(), one);
        assert!(AlgebraElement::momentum(&a, 0, 4).invert().is_err());
    }
}
