//! κ-Minkowski coordinates `[x^μ, x^ν] = ih(τ^μ x^ν − τ^ν x^μ)` and the
//! action of the deformed symmetry algebra on them.
//!
//! The classical action `P_μ ▷ x^ν = −iδ_μ^ν`,
//! `M_{μν} ▷ x^ρ = −i(x_μ δ_ν^ρ − x_ν δ_μ^ρ)` reverses brackets, so a product
//! `L₁L₂` acts with `L₁` first: `(L₁L₂) ▷ a = L₂ ▷ (L₁ ▷ a)`. Products of
//! coordinates are handled by the Leibniz rule through `Δ_τ`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::{Arc, Mutex};
use std::time::Instant;

use num_traits::Zero;

use crate::algebra::{AlgebraElement, VectorTau};
use crate::error::{Error, Result};
use crate::hopf::DeformationContext;
use crate::lie::Generator;
use crate::metric::Metric;
use crate::pbw::{Monomial, PbwEngine};
use crate::report::{CheckResult, Residual, VerificationReport};
use crate::scalar::GaussRational;
use crate::series::HSeries;

/// The coordinate algebra for a fixed `(g, τ)`.
#[derive(Debug)]
pub struct MinkowskiSpace {
    metric: Metric,
    tau: VectorTau,
    pbw: PbwEngine,
}

impl MinkowskiSpace {
    pub fn new(metric: Metric, tau: VectorTau) -> Arc<MinkowskiSpace> {
        let d = metric.dim();
        let t: Vec<GaussRational> = tau.components().iter().map(|c| GaussRational::real(c.clone())).collect();
        // For y > x: x^y x^x = x^x x^y + ih(τ^y x^x − τ^x x^y).
        let pbw = PbwEngine::new(d, |y, x| {
            let mut rel = Vec::new();
            if !t[y as usize].is_zero() {
                rel.push((x, 1, t[y as usize].times_i()));
            }
            if !t[x as usize].is_zero() {
                rel.push((y, 1, -t[x as usize].times_i()));
            }
            rel
        });
        Arc::new(MinkowskiSpace { metric, tau, pbw })
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    pub fn tau(&self) -> &VectorTau {
        &self.tau
    }

    fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || (self.metric == other.metric && self.tau == other.tau)
    }
}

/// An element of the coordinate algebra, with normal-ordered monomials
/// (indices nondecreasing).
#[derive(Clone)]
pub struct MinkowskiElement {
    space: Arc<MinkowskiSpace>,
    order: usize,
    terms: BTreeMap<Monomial, HSeries>,
}

impl MinkowskiElement {
    pub fn zero(space: &Arc<MinkowskiSpace>, order: usize) -> Self {
        MinkowskiElement { space: space.clone(), order, terms: BTreeMap::new() }
    }

    pub fn one(space: &Arc<MinkowskiSpace>, order: usize) -> Self {
        Self::scalar(space, HSeries::one(order))
    }

    pub fn scalar(space: &Arc<MinkowskiSpace>, s: HSeries) -> Self {
        let mut e = Self::zero(space, s.order());
        e.add_term(Monomial::new(), &s);
        e
    }

    pub fn coordinate(space: &Arc<MinkowskiSpace>, mu: usize, order: usize) -> Self {
        Self::word(space, &[mu as u8], order)
    }

    /// The normal form of an arbitrary coordinate word.
    pub fn word(space: &Arc<MinkowskiSpace>, word: &[u8], order: usize) -> Self {
        let mut e = Self::zero(space, order);
        let one = HSeries::one(order);
        for (m, k, c) in space.pbw.normal_order(word) {
            e.add_scaled(&m, &one, &c, k as usize);
        }
        e
    }

    pub fn space(&self) -> &Arc<MinkowskiSpace> {
        &self.space
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &HSeries)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &[u8]) -> HSeries {
        self.terms.get(m).cloned().unwrap_or_else(|| HSeries::zero(self.order))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &HSeries) {
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

    fn add_scaled(&mut self, m: &Monomial, coeff: &HSeries, c: &GaussRational, k: usize) {
        if k > self.order {
            return;
        }
        let mut s = HSeries::zero(self.order);
        s.add_scaled_shifted(coeff, c, k);
        self.add_term(m.clone(), &s);
    }

    fn check(&self, other: &MinkowskiElement) -> Result<()> {
        if !self.space.same_as(&other.space) {
            return Err(Error::ContextMismatch);
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MinkowskiElement) -> Result<MinkowskiElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MinkowskiElement) -> Result<MinkowskiElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    /// Product with normal ordering.
    pub fn checked_mul(&self, other: &MinkowskiElement) -> Result<MinkowskiElement> {
        self.check(other)?;
        let mut out = MinkowskiElement::zero(&self.space, self.order);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca.mul_unchecked(cb);
                if prod.is_zero() {
                    continue;
                }
                for (m, k, c) in self.space.pbw.mul_mono(ma, mb).iter() {
                    out.add_scaled(m, &prod, c, *k as usize);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussRational) -> MinkowskiElement {
        self.scale_series(&HSeries::constant(c.clone(), self.order))
    }

    pub fn scale_series(&self, s: &HSeries) -> MinkowskiElement {
        let mut out = MinkowskiElement::zero(&self.space, self.order);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.mul_unchecked(s));
        }
        out
    }

    pub fn shift_h(&self, k: usize) -> MinkowskiElement {
        let mut out = MinkowskiElement::zero(&self.space, self.order);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.shift(k));
        }
        out
    }
}

impl PartialEq for MinkowskiElement {
    fn eq(&self, other: &Self) -> bool {
        self.space.same_as(&other.space) && self.order == other.order && self.terms == other.terms
    }
}

impl fmt::Display for MinkowskiElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono = if m.is_empty() {
                    "1".to_string()
                } else {
                    m.iter().map(|mu| format!("x^{mu}")).collect::<Vec<_>>().join(" ")
                };
                format!("({}) {mono}", crate::render::series_inline(c))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for MinkowskiElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &MinkowskiElement {
    type Output = MinkowskiElement;
    fn add(self, rhs: &MinkowskiElement) -> MinkowskiElement {
        self.checked_add(rhs).expect("coordinate element mismatch")
    }
}

impl Sub for &MinkowskiElement {
    type Output = MinkowskiElement;
    fn sub(self, rhs: &MinkowskiElement) -> MinkowskiElement {
        self.checked_sub(rhs).expect("coordinate element mismatch")
    }
}

impl Mul for &MinkowskiElement {
    type Output = MinkowskiElement;
    fn mul(self, rhs: &MinkowskiElement) -> MinkowskiElement {
        self.checked_mul(rhs).expect("coordinate element mismatch")
    }
}

/// A formal combination of unreduced coordinate words, used to state the
/// defining relation before it is imposed.
pub type FreeWords = BTreeMap<Vec<u8>, HSeries>;

/// `x^μ x^ν − x^ν x^μ − ih(τ^μ x^ν − τ^ν x^μ)` as free words.
pub fn relation_element(tau: &VectorTau, mu: usize, nu: usize, order: usize) -> FreeWords {
    let mut w = FreeWords::new();
    let mut put = |word: Vec<u8>, c: HSeries| {
        let e = w.entry(word).or_insert_with(|| HSeries::zero(order));
        *e = &*e + &c;
    };
    put(vec![mu as u8, nu as u8], HSeries::one(order));
    put(vec![nu as u8, mu as u8], HSeries::constant(GaussRational::from_int(-1), order));
    let ih = |t: &crate::scalar::Rational| HSeries::monomial(GaussRational::real(t.clone()).times_i(), 1, order);
    put(vec![nu as u8], -&ih(tau.up(mu)));
    put(vec![mu as u8], ih(tau.up(nu)));
    w.retain(|_, c| !c.is_zero());
    w
}

/// Antilinear word reversal `(x^{μ₁}…x^{μ_k})* = x^{μ_k}…x^{μ₁}`.
pub fn star_words(w: &FreeWords) -> FreeWords {
    w.iter().map(|(word, c)| (word.iter().rev().copied().collect(), c.conj())).collect()
}

/// The module action of a deformation context on its coordinate algebra,
/// with memoized evaluation on (symmetry monomial, coordinate word) pairs.
pub struct ModuleAction<'a> {
    ctx: &'a DeformationContext,
    space: Arc<MinkowskiSpace>,
    cache: Mutex<HashMap<(Monomial, Vec<u8>), MinkowskiElement>>,
}

impl<'a> ModuleAction<'a> {
    pub fn new(ctx: &'a DeformationContext) -> ModuleAction<'a> {
        let space = MinkowskiSpace::new(ctx.metric().clone(), ctx.tau().clone());
        ModuleAction { ctx, space, cache: Mutex::new(HashMap::new()) }
    }

    pub fn space(&self) -> &Arc<MinkowskiSpace> {
        &self.space
    }

    fn order(&self) -> usize {
        self.ctx.order()
    }

    pub fn coordinate(&self, mu: usize) -> MinkowskiElement {
        MinkowskiElement::coordinate(&self.space, mu, self.order())
    }

    pub fn word(&self, w: &[u8]) -> MinkowskiElement {
        MinkowskiElement::word(&self.space, w, self.order())
    }

    /// `L ▷ a`.
    pub fn act(&self, l: &AlgebraElement, a: &MinkowskiElement) -> MinkowskiElement {
        let mut out = MinkowskiElement::zero(&self.space, self.order());
        for (m, c) in l.terms() {
            for (w, d) in a.terms() {
                let r = self.act_word(m, w);
                out = &out + &r.scale_series(&c.mul_unchecked(d));
            }
        }
        out
    }

    /// `L ▷ (unreduced word combination)`, then normal-ordered.
    pub fn act_free(&self, l: &AlgebraElement, w: &FreeWords) -> MinkowskiElement {
        let mut out = MinkowskiElement::zero(&self.space, self.order());
        for (m, c) in l.terms() {
            for (word, d) in w {
                out = &out + &self.act_word(m, word).scale_series(&c.mul_unchecked(d));
            }
        }
        out
    }

    /// Action of a PBW monomial on a word.
    pub fn act_word(&self, m: &[u8], word: &[u8]) -> MinkowskiElement {
        let n = self.order();
        if word.is_empty() {
            return if m.is_empty() {
                MinkowskiElement::one(&self.space, n)
            } else {
                MinkowskiElement::zero(&self.space, n)
            };
        }
        if m.is_empty() {
            return self.word(word);
        }
        let key = (Monomial::from_slice(m), word.to_vec());
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let out = if m.len() > 1 {
            // First factor acts first.
            let inner = self.act_word(&m[..1], word);
            let rest = &m[1..];
            let mut acc = MinkowskiElement::zero(&self.space, n);
            for (w, c) in inner.terms() {
                acc = &acc + &self.act_word(rest, w).scale_series(c);
            }
            acc
        } else if word.len() == 1 {
            self.act_generator_on_coordinate(self.ctx.algebra().generator(m[0]), word[0] as usize)
        } else {
            // Leibniz: g ▷ (x·rest) = Σ (g₍₁₎ ▷ x)(g₍₂₎ ▷ rest).
            let delta = self.ctx.coproduct_index(m[0]);
            let mut acc = MinkowskiElement::zero(&self.space, n);
            for (k, c) in delta.terms() {
                let left = self.act_word(&k[0], &word[..1]);
                if left.is_zero() {
                    continue;
                }
                let right = self.act_word(&k[1], &word[1..]);
                if right.is_zero() {
                    continue;
                }
                acc = &acc + &(&left * &right).scale_series(c);
            }
            acc
        };
        self.cache.lock().unwrap().insert(key, out.clone());
        out
    }

    fn act_generator_on_coordinate(&self, g: Generator, rho: usize) -> MinkowskiElement {
        let n = self.order();
        let minus_i = GaussRational::from_int(0) - GaussRational::i();
        match g {
            Generator::Momentum(mu) => {
                if mu == rho {
                    MinkowskiElement::scalar(&self.space, HSeries::constant(minus_i, n))
                } else {
                    MinkowskiElement::zero(&self.space, n)
                }
            }
            Generator::Rotation(mu, nu) => {
                // −i(x_μ δ_ν^ρ − x_ν δ_μ^ρ), x_μ = g_{μα} x^α.
                let lower = |a: usize| {
                    let mut e = MinkowskiElement::zero(&self.space, n);
                    for b in 0..self.space.dim() {
                        let gab = self.ctx.metric().g(a, b);
                        if !gab.is_zero() {
                            e = &e + &self.coordinate(b).scale(&GaussRational::real(gab.clone()));
                        }
                    }
                    e
                };
                let mut e = MinkowskiElement::zero(&self.space, n);
                if nu == rho {
                    e = &e + &lower(mu);
                }
                if mu == rho {
                    e = &e - &lower(nu);
                }
                e.scale(&minus_i)
            }
        }
    }

    /// Normal-ordered monomials of degree `1..=max_degree`.
    pub fn monomials(&self, max_degree: usize) -> Vec<Vec<u8>> {
        let d = self.space.dim() as u8;
        let mut out: Vec<Vec<u8>> = Vec::new();
        let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
        for _ in 0..max_degree {
            let mut next = Vec::new();
            for w in &layer {
                let start = w.last().copied().unwrap_or(0);
                for x in start..d {
                    let mut v = w.clone();
                    v.push(x);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Covariance of the coordinate relations together with the module and
    /// Leibniz axioms on monomials up to `max_degree`.
    pub fn verify_covariance(&self, max_degree: usize) -> VerificationReport {
        let start = Instant::now();
        let mut report = VerificationReport::new("minkowski");
        let n = self.order();
        let alg = self.ctx.algebra();
        let d = self.space.dim();
        let gens: Vec<(Generator, AlgebraElement)> = alg
            .basis()
            .generators()
            .iter()
            .map(|&g| (g, AlgebraElement::generator(alg, g, n).expect("basis")))
            .collect();
        let tau = self.space.tau();

        let mut rel = Vec::new();
        for (g, l) in &gens {
            for mu in 0..d {
                for nu in mu + 1..d {
                    let r = self.act_free(l, &relation_element(tau, mu, nu, n));
                    rel.push(minkowski_zero("relation-covariance", Some(format!("{g} on [x^{mu}, x^{nu}]")), &r));
                }
            }
        }
        report.push(CheckResult::all("relation-covariance", rel));

        let monos = self.monomials(max_degree);
        let mut module = Vec::new();
        for (g1, l1) in &gens {
            for (g2, l2) in &gens {
                let prod = l1 * l2;
                for w in &monos {
                    let a = self.word(w);
                    let lhs = self.act(&prod, &a);
                    let rhs = self.act(l2, &self.act(l1, &a));
                    module.push(minkowski_zero("module-axiom", Some(format!("{g1}·{g2} on {a}")), &(&lhs - &rhs)));
                }
            }
        }
        report.push(CheckResult::all("module-axiom", module));

        let mut leibniz = Vec::new();
        for (g, l) in &gens {
            let delta = self.ctx.coproduct(*g).expect("basis");
            for wa in &monos {
                for wb in &monos {
                    if wa.len() + wb.len() > max_degree {
                        continue;
                    }
                    let (a, b) = (self.word(wa), self.word(wb));
                    let lhs = self.act(l, &(&a * &b));
                    let mut rhs = MinkowskiElement::zero(&self.space, n);
                    for (k, c) in delta.terms() {
                        let la = AlgebraElement::from_monomial(alg, k[0].clone(), HSeries::one(n));
                        let lb = AlgebraElement::from_monomial(alg, k[1].clone(), HSeries::one(n));
                        rhs = &rhs + &(&self.act(&la, &a) * &self.act(&lb, &b)).scale_series(c);
                    }
                    leibniz.push(minkowski_zero("leibniz", Some(format!("{g} on ({a})({b})")), &(&lhs - &rhs)));
                }
            }
        }
        report.push(CheckResult::all("leibniz", leibniz));

        let one_alg = AlgebraElement::one(alg, n);
        let one = MinkowskiElement::one(&self.space, n);
        let mut units = Vec::new();
        for w in &monos {
            let a = self.word(w);
            units.push(minkowski_zero("unit-action", Some(format!("1 on {a}")), &(&self.act(&one_alg, &a) - &a)));
        }
        for (g, l) in &gens {
            units.push(minkowski_zero("unit-action", Some(format!("{g} on 1")), &self.act(l, &one)));
        }
        report.push(CheckResult::all("unit-action", units));

        let c = self.ctx.casimir();
        let mut central = Vec::new();
        for (g, l) in &gens {
            for w in monos.iter().filter(|w| w.len() <= 2) {
                let a = self.word(w);
                let lhs = self.act(c, &self.act(l, &a));
                let rhs = self.act(l, &self.act(c, &a));
                central.push(minkowski_zero("casimir-commutes", Some(format!("{g} on {a}")), &(&lhs - &rhs)));
            }
        }
        report.push(CheckResult::all("casimir-commutes", central));

        let mut reality = Vec::new();
        for mu in 0..d {
            for nu in mu + 1..d {
                let r = relation_element(tau, mu, nu, n);
                let neg: FreeWords = r.iter().map(|(w, c)| (w.clone(), -c)).collect();
                if star_words(&r) != neg {
                    reality.push(CheckResult::fail(
                        "reality",
                        Some(format!("[x^{mu}, x^{nu}]")),
                        Residual::Message("conjugated relation is not a multiple of the relation".into()),
                    ));
                }
            }
        }
        report.push(CheckResult::all("reality", reality));
        report.elapsed = start.elapsed();
        report
    }
}

fn minkowski_zero(name: &str, generator: Option<String>, e: &MinkowskiElement) -> CheckResult {
    if e.is_zero() {
        CheckResult::pass(name)
    } else {
        let mut lead = MinkowskiElement::zero(&e.space, e.order);
        if let Some((m, c)) = e.terms.iter().next() {
            lead.add_term(m.clone(), c);
        }
        CheckResult::fail(name, generator, Residual::Minkowski(lead))
    }
}

/// `L ▷ a` for a one-off evaluation.
pub fn act(ctx: &DeformationContext, l: &AlgebraElement, a: &MinkowskiElement) -> MinkowskiElement {
    ModuleAction { ctx, space: a.space().clone(), cache: Mutex::new(HashMap::new()) }.act(l, a)
}

/// The covariance suite for `ctx`.
pub fn verify_covariance(ctx: &DeformationContext, max_degree: usize) -> VerificationReport {
    ModuleAction::new(ctx).verify_covariance(max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn time_like(order: usize) -> DeformationContext {
        DeformationContext::from_ints(Metric::minkowski(4), &[1, 0, 0, 0], order).unwrap()
    }

    #[test]
    fn single_rewrite() {
        // τ = (1,0,0,0): x¹x⁰ = x⁰x¹ − ih x¹.
        let ctx = time_like(2);
        let act = ModuleAction::new(&ctx);
        let want = &act.word(&[0, 1]) - &act.coordinate(1).shift_h(1).scale(&GaussRational::i());
        assert_eq!(act.word(&[1, 0]), want);
        assert_eq!(act.word(&[2, 1]), act.word(&[1, 2]));
    }

    #[test]
    fn classical_action() {
        let ctx = time_like(2);
        let a = ModuleAction::new(&ctx);
        let alg = ctx.algebra();
        let minus_i = GaussRational::from_int(0) - GaussRational::i();
        let p1 = AlgebraElement::momentum(alg, 1, 2);
        assert_eq!(
            a.act(&p1, &a.coordinate(1)),
            MinkowskiElement::scalar(a.space(), HSeries::constant(minus_i.clone(), 2))
        );
        // M_12 ▷ x² = −i x_1 = −i x¹.
        let m12 = AlgebraElement::rotation(alg, 1, 2, 2);
        assert_eq!(a.act(&m12, &a.coordinate(2)), a.coordinate(1).scale(&minus_i));
        // P_1 ▷ (x⁰x¹) = −i x⁰.
        assert_eq!(a.act(&p1, &a.word(&[0, 1])), a.coordinate(0).scale(&minus_i));
    }

    #[test]
    fn literal_left_composition_fails() {
        // L₁ ▷ (L₂ ▷ a) does not reproduce (L₁L₂) ▷ a; the reversed order does.
        let ctx = time_like(1);
        let a = ModuleAction::new(&ctx);
        let alg = ctx.algebra();
        let m01 = AlgebraElement::rotation(alg, 0, 1, 1);
        let p0 = AlgebraElement::momentum(alg, 0, 1);
        let x = a.coordinate(1);
        let prod = &m01 * &p0;
        let prod_rev = &p0 * &m01;
        let commutator_action = &a.act(&prod, &x) - &a.act(&prod_rev, &x);
        let literal = &a.act(&m01, &a.act(&p0, &x)) - &a.act(&p0, &a.act(&m01, &x));
        assert!(!literal.is_zero());
        assert_ne!(commutator_action, literal);
        let reversed = &a.act(&p0, &a.act(&m01, &x)) - &a.act(&m01, &a.act(&p0, &x));
        assert_eq!(commutator_action, reversed);
    }

    #[test]
    fn reality_of_relation() {
        let g = Metric::minkowski(3);
        let tau = VectorTau::from_ints(&g, &[1, 2, 0]).unwrap();
        let r = relation_element(&tau, 0, 1, 2);
        let neg: FreeWords = r.iter().map(|(w, c)| (w.clone(), -c)).collect();
        assert_eq!(star_words(&r), neg);
    }

    #[test]
    fn covariance_small() {
        let ctx = DeformationContext::from_ints(Metric::minkowski(3), &[1, 0, 0], 2).unwrap();
        let r = verify_covariance(&ctx, 2);
        assert!(r.passed(), "{r}");
    }
}
