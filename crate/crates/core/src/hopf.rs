//! The τ-deformed Hopf structure in the classical basis.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use crate::algebra::{casimir, contract_tau, raised_momentum, Algebra, AlgebraElement, VectorTau};
use crate::error::{Error, Result};
use crate::lie::{GenIndex, Generator};
use crate::metric::Metric;
use crate::orbit::{classify_orbit, stability_generators, OrbitClassification};
use crate::pbw::Monomial;
use crate::report::{CheckResult, Residual, VerificationReport};
use crate::scalar::{binom_half, int, GaussRational, Rational};
use crate::series::HSeries;
use crate::tensor::{TensorElement, TensorKey};
use crate::wedge::r_matrix;

/// A single coproduct coefficient altered on purpose, for negative controls.
#[derive(Clone, Debug)]
pub struct CoproductDefect {
    pub generator: Generator,
    pub key: TensorKey,
    pub delta: HSeries,
}

/// The pair `(g, τ)` at truncation order `N`, with every derived element
/// precomputed.
pub struct DeformationContext {
    alg: Arc<Algebra>,
    tau: VectorTau,
    order: usize,
    orbit: Option<OrbitClassification>,
    p_tau: AlgebraElement,
    m_tau: Vec<AlgebraElement>,
    casimir: AlgebraElement,
    sqrt: AlgebraElement,
    pi: AlgebraElement,
    pi_inv: AlgebraElement,
    c_tau: AlgebraElement,
    delta: Vec<TensorElement>,
    antipode: Vec<AlgebraElement>,
    delta_cache: Mutex<HashMap<Monomial, TensorElement>>,
    antipode_cache: Mutex<HashMap<Monomial, AlgebraElement>>,
}

impl std::fmt::Debug for DeformationContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DeformationContext")
            .field("metric", self.alg.metric())
            .field("tau", &self.tau)
            .field("order", &self.order)
            .finish()
    }
}

impl DeformationContext {
    pub fn new(metric: Metric, tau: Vec<Rational>, order: usize) -> Result<DeformationContext> {
        let tau = VectorTau::new(&metric, tau)?;
        Self::with_algebra(&Algebra::new(metric), tau, order)
    }

    pub fn from_ints(metric: Metric, tau: &[i64], order: usize) -> Result<DeformationContext> {
        Self::new(metric, tau.iter().map(|&x| int(x)).collect(), order)
    }

    pub fn with_algebra(alg: &Arc<Algebra>, tau: VectorTau, order: usize) -> Result<DeformationContext> {
        if order == 0 {
            return Err(Error::Invalid("truncation order must be at least 1".into()));
        }
        if tau.components().len() != alg.dim() {
            return Err(Error::IndexOutOfRange(format!("τ has {} components", tau.components().len())));
        }
        let n = order;
        let orbit = if tau.is_zero() { None } else { Some(classify_orbit(alg.metric(), &tau)?) };
        let (p_tau, m_tau) = contract_tau(alg, &tau, n);
        let c = casimir(alg, n);
        let tau_sq = tau.square().clone();

        // √(1 + h²τ²C) = Σ binom(1/2, n) (τ²)ⁿ h²ⁿ Cⁿ.
        let mut sqrt = AlgebraElement::zero(alg, n);
        let mut c_tau = AlgebraElement::zero(alg, n);
        let mut c_pow = AlgebraElement::one(alg, n);
        for k in 0..=n / 2 + 1 {
            if 2 * k <= n {
                let coef = binom_half(k) * pow_rational(&tau_sq, k);
                sqrt = &sqrt + &c_pow.shift_h(2 * k).scale_rational(&coef);
            }
            // C_τ = 2 Σ_{k≥1} binom(1/2, k) (τ²)^{k−1} h^{2k−2} C^k.
            if k >= 1 && 2 * k - 2 <= n {
                let coef = binom_half(k) * pow_rational(&tau_sq, k - 1) * int(2);
                c_tau = &c_tau + &c_pow.shift_h(2 * k - 2).scale_rational(&coef);
            }
            c_pow = &c_pow * &c;
        }
        let pi = &p_tau.shift_h(1) + &sqrt;
        let pi_inv = pi.invert()?;

        let mut ctx = DeformationContext {
            alg: alg.clone(),
            tau,
            order: n,
            orbit,
            p_tau,
            m_tau,
            casimir: c,
            sqrt,
            pi,
            pi_inv,
            c_tau,
            delta: Vec::new(),
            antipode: Vec::new(),
            delta_cache: Mutex::new(HashMap::new()),
            antipode_cache: Mutex::new(HashMap::new()),
        };
        let gens: Vec<Generator> = alg.basis().generators().to_vec();
        ctx.delta = gens.iter().map(|&g| ctx.coproduct_formula(g)).collect();
        ctx.antipode = gens.iter().map(|&g| ctx.antipode_formula(g)).collect();
        Ok(ctx)
    }

    /// A copy with one coproduct coefficient shifted by `defect.delta`.
    pub fn with_coproduct_defect(&self, defect: &CoproductDefect) -> Result<DeformationContext> {
        let mut ctx = DeformationContext::with_algebra(&self.alg, self.tau.clone(), self.order)?;
        let idx = self.alg.basis().index(defect.generator)? as usize;
        let mut t = ctx.delta[idx].clone();
        let old = t.coefficient(&defect.key.iter().map(|m| &m[..]).collect::<Vec<_>>());
        t.set_coefficient(defect.key.clone(), &old + &defect.delta);
        ctx.delta[idx] = t;
        Ok(ctx)
    }

    /// The same `(g, τ)` at another truncation order.
    pub fn at_order(&self, order: usize) -> Result<DeformationContext> {
        DeformationContext::with_algebra(&self.alg, self.tau.clone(), order)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn metric(&self) -> &Metric {
        self.alg.metric()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn tau(&self) -> &VectorTau {
        &self.tau
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn orbit(&self) -> Option<&OrbitClassification> {
        self.orbit.as_ref()
    }

    pub fn p_tau(&self) -> &AlgebraElement {
        &self.p_tau
    }

    /// `M_{τλ}` for `λ = 0..D−1`.
    pub fn m_tau(&self) -> &[AlgebraElement] {
        &self.m_tau
    }

    pub fn casimir(&self) -> &AlgebraElement {
        &self.casimir
    }

    /// `√(1 + h²τ²C)`.
    pub fn sqrt_term(&self) -> &AlgebraElement {
        &self.sqrt
    }

    /// `Π_τ = hP_τ + √(1 + h²τ²C)`.
    pub fn pi_tau(&self) -> &AlgebraElement {
        &self.pi
    }

    /// `Π_τ⁻¹`, computed as the series inverse of `Π_τ`.
    pub fn pi_tau_inv(&self) -> &AlgebraElement {
        &self.pi_inv
    }

    /// `Π_τ⁻¹` from the closed form
    /// `(√(1 + h²τ²C) − hP_τ) · Σ_k (−h²(τ²C − P_τ²))^k`.
    pub fn pi_tau_inv_closed_form(&self) -> AlgebraElement {
        let n = self.order;
        let numer = &self.sqrt - &self.p_tau.shift_h(1);
        let x = &self.casimir.scale_rational(self.tau.square()) - &(&self.p_tau * &self.p_tau);
        let q = x.shift_h(2).scale(&GaussRational::from_int(-1));
        let mut geom = AlgebraElement::one(&self.alg, n);
        let mut power = AlgebraElement::one(&self.alg, n);
        for _ in 1..=n / 2 {
            power = &power * &q;
            geom = &geom + &power;
        }
        &numer * &geom
    }

    /// Both routes to `Π_τ⁻¹`; disagreement is a defect in the engine.
    pub fn pi_tau_inv_checked(&self) -> Result<AlgebraElement> {
        let closed = self.pi_tau_inv_closed_form();
        if closed != self.pi_inv {
            return Err(Error::Defect(format!(
                "closed-form and series inverses of Π_τ differ by {}",
                &closed - &self.pi_inv
            )));
        }
        Ok(closed)
    }

    /// The deformed Casimir `C_τ`, equal to `C` when `τ² = 0`.
    pub fn c_tau(&self) -> &AlgebraElement {
        &self.c_tau
    }

    fn one(&self) -> AlgebraElement {
        AlgebraElement::one(&self.alg, self.order)
    }

    fn half_h2(&self, x: &AlgebraElement) -> AlgebraElement {
        x.shift_h(2).scale(&GaussRational::from_ratio(1, 2))
    }

    // Σ_α P^α Π⁻¹ ⊗ X_α for a family X.
    fn contract_with_momenta(&self, right: impl Fn(usize) -> AlgebraElement) -> TensorElement {
        let n = self.order;
        let mut t = TensorElement::zero(&self.alg, 2, n);
        for a in 0..self.dim() {
            let r = right(a);
            if r.is_zero() {
                continue;
            }
            let left = &raised_momentum(&self.alg, a, n) * &self.pi_inv;
            t = &t + &TensorElement::pair(&left, &r);
        }
        t
    }

    fn coproduct_formula(&self, g: Generator) -> TensorElement {
        let n = self.order;
        let one = self.one();
        let tau = &self.tau;
        match g {
            Generator::Momentum(mu) => {
                let p = AlgebraElement::momentum(&self.alg, mu, n);
                let mut t = &TensorElement::pair(&p, &self.pi) + &TensorElement::pair(&one, &p);
                let tm = tau.down(mu);
                if !num_traits::Zero::is_zero(tm) {
                    let tm = GaussRational::real(tm.clone());
                    let pp = self.contract_with_momenta(|a| AlgebraElement::momentum(&self.alg, a, n));
                    t = &t - &pp.shift_h(1).scale(&tm);
                    let cc = TensorElement::pair(&self.half_h2(&(&self.c_tau * &self.pi_inv)), &self.p_tau);
                    t = &t - &cc.scale(&tm);
                }
                t
            }
            Generator::Rotation(mu, nu) => {
                let m = AlgebraElement::rotation(&self.alg, mu, nu, n);
                let mut t = &TensorElement::pair(&m, &one) + &TensorElement::pair(&one, &m);
                let (tm, tn) = (GaussRational::real(tau.down(mu).clone()), GaussRational::real(tau.down(nu).clone()));
                let first = self.contract_with_momenta(|a| {
                    &AlgebraElement::rotation(&self.alg, a, mu, n).scale(&tn)
                        - &AlgebraElement::rotation(&self.alg, a, nu, n).scale(&tm)
                });
                t = &t + &first.shift_h(1);
                let right = &self.m_tau[nu].scale(&tm) - &self.m_tau[mu].scale(&tn);
                if !right.is_zero() {
                    t = &t - &TensorElement::pair(&self.half_h2(&(&self.c_tau * &self.pi_inv)), &right);
                }
                t
            }
        }
    }

    fn antipode_formula(&self, g: Generator) -> AlgebraElement {
        let n = self.order;
        let tau = &self.tau;
        match g {
            Generator::Momentum(mu) => {
                let p = AlgebraElement::momentum(&self.alg, mu, n);
                let tm = GaussRational::real(tau.down(mu).clone());
                // P_μ + hτ_μ(C + (h/2) P_τ C_τ)
                let inner = &self.casimir + &(&self.p_tau * &self.c_tau).shift_h(1).scale(&GaussRational::from_ratio(1, 2));
                let x = &p + &inner.shift_h(1).scale(&tm);
                (&x * &self.pi_inv).scale(&GaussRational::from_int(-1))
            }
            Generator::Rotation(mu, nu) => {
                let m = AlgebraElement::rotation(&self.alg, mu, nu, n);
                let (tm, tn) = (GaussRational::real(tau.down(mu).clone()), GaussRational::real(tau.down(nu).clone()));
                let mut s = m.scale(&GaussRational::from_int(-1));
                for a in 0..self.dim() {
                    let r = &AlgebraElement::rotation(&self.alg, a, mu, n).scale(&tn)
                        - &AlgebraElement::rotation(&self.alg, a, nu, n).scale(&tm);
                    if !r.is_zero() {
                        s = &s + &(&raised_momentum(&self.alg, a, n) * &r).shift_h(1);
                    }
                }
                let r = &self.m_tau[mu].scale(&tn) - &self.m_tau[nu].scale(&tm);
                &s + &self.half_h2(&(&self.c_tau * &r))
            }
        }
    }

    /// `Δ_τ(x)` for a generator.
    pub fn coproduct(&self, g: Generator) -> Result<TensorElement> {
        Ok(self.delta[self.alg.basis().index(g)? as usize].clone())
    }

    pub(crate) fn coproduct_index(&self, idx: GenIndex) -> &TensorElement {
        &self.delta[idx as usize]
    }

    /// `Δ_τ` extended multiplicatively and linearly.
    pub fn coproduct_extend(&self, a: &AlgebraElement) -> TensorElement {
        let mut out = TensorElement::zero(&self.alg, 2, a.order());
        for (m, c) in a.terms() {
            let d = self.coproduct_monomial(m);
            let d = if a.order() == self.order { d } else { d.with_order(a.order()) };
            out = &out + &d.scale_series(c);
        }
        out
    }

    /// `Δ_τ` of a normal-ordered monomial, memoized.
    pub fn coproduct_monomial(&self, m: &Monomial) -> TensorElement {
        if m.is_empty() {
            return TensorElement::one(&self.alg, 2, self.order);
        }
        if m.len() == 1 {
            return self.delta[m[0] as usize].clone();
        }
        if let Some(hit) = self.delta_cache.lock().unwrap().get(m) {
            return hit.clone();
        }
        let prefix: Monomial = m[..m.len() - 1].iter().copied().collect();
        let out = &self.coproduct_monomial(&prefix) * &self.delta[m[m.len() - 1] as usize];
        self.delta_cache.lock().unwrap().insert(m.clone(), out.clone());
        out
    }

    /// The primitive coproduct `Δ₀(a)`, extended multiplicatively.
    pub fn primitive_coproduct(&self, a: &AlgebraElement) -> TensorElement {
        let one = AlgebraElement::one(&self.alg, a.order());
        let mut out = TensorElement::zero(&self.alg, 2, a.order());
        for (m, c) in a.terms() {
            let mut d = TensorElement::one(&self.alg, 2, a.order());
            for &g in m.iter() {
                let x = AlgebraElement::from_index(&self.alg, g, a.order());
                d = &d * &(&TensorElement::pair(&x, &one) + &TensorElement::pair(&one, &x));
            }
            out = &out + &d.scale_series(c);
        }
        out
    }

    /// `S_τ(x)` for a generator.
    pub fn antipode(&self, g: Generator) -> Result<AlgebraElement> {
        Ok(self.antipode[self.alg.basis().index(g)? as usize].clone())
    }

    /// `S_τ` extended as a linear anti-homomorphism.
    pub fn antipode_extend(&self, a: &AlgebraElement) -> AlgebraElement {
        a.map_monomials(|m| self.antipode_monomial(m))
    }

    fn antipode_monomial(&self, m: &Monomial) -> AlgebraElement {
        if m.is_empty() {
            return self.one();
        }
        if m.len() == 1 {
            return self.antipode[m[0] as usize].clone();
        }
        if let Some(hit) = self.antipode_cache.lock().unwrap().get(m) {
            return hit.clone();
        }
        let prefix: Monomial = m[..m.len() - 1].iter().copied().collect();
        let out = &self.antipode[m[m.len() - 1] as usize] * &self.antipode_monomial(&prefix);
        self.antipode_cache.lock().unwrap().insert(m.clone(), out.clone());
        out
    }

    /// The classical counit: coefficient of the empty monomial.
    pub fn counit(&self, a: &AlgebraElement) -> HSeries {
        counit(a)
    }

    /// `(Δ⊗id)` or `(id⊗Δ)` applied to a tensor.
    pub fn coproduct_on_leg(&self, t: &TensorElement, leg: usize) -> TensorElement {
        t.map_leg(leg, &|m| self.coproduct_monomial(m))
    }

    /// The r-matrix as a full 2-tensor at this order (zero for `τ = 0`).
    pub fn r_tensor(&self) -> TensorElement {
        match r_matrix(&self.alg, &self.tau) {
            Ok(r) => r.to_tensor(self.order),
            Err(_) => TensorElement::zero(&self.alg, 2, self.order),
        }
    }

    /// `Δ(√(1 + h²τ²C))` in closed form:
    /// `√⊗Π_τ − hΠ_τ⁻¹⊗P_τ − h²P_τΠ_τ⁻¹⊗P_τ + h²τ²P^αΠ_τ⁻¹⊗P_α`.
    pub fn sqrt_coproduct_formula(&self) -> TensorElement {
        let n = self.order;
        let mut t = &TensorElement::pair(&self.sqrt, &self.pi) - &TensorElement::pair(&self.pi_inv, &self.p_tau).shift_h(1);
        t = &t - &TensorElement::pair(&(&self.p_tau * &self.pi_inv), &self.p_tau).shift_h(2);
        let pp = self.contract_with_momenta(|a| AlgebraElement::momentum(&self.alg, a, n));
        &t + &pp.shift_h(2).scale_rational_tensor(self.tau.square())
    }

    fn generators(&self) -> Vec<(Generator, AlgebraElement)> {
        self.alg
            .basis()
            .generators()
            .iter()
            .map(|&g| (g, AlgebraElement::generator(&self.alg, g, self.order).expect("basis generator")))
            .collect()
    }

    fn pairs(&self) -> Vec<(GenIndex, GenIndex)> {
        let n = self.alg.basis().len() as GenIndex;
        (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect()
    }

    fn pair_label(&self, x: GenIndex, y: GenIndex) -> String {
        format!("[{}, {}]", self.alg.generator(x), self.alg.generator(y))
    }

    pub fn check_homomorphism(&self) -> CheckResult {
        let n = self.order;
        CheckResult::all(
            "homomorphism",
            self.pairs().into_iter().map(|(x, y)| {
                let br = AlgebraElement::from_lie(&self.alg, self.alg.structure().get(x, y), n);
                let lhs = self.coproduct_extend(&br);
                let (dx, dy) = (&self.delta[x as usize], &self.delta[y as usize]);
                let rhs = &(dx * dy) - &(dy * dx);
                CheckResult::tensor_zero("homomorphism", Some(self.pair_label(x, y)), &(&lhs - &rhs))
            }),
        )
    }

    pub fn check_coassociativity(&self) -> CheckResult {
        CheckResult::all(
            "coassociativity",
            self.generators().into_iter().map(|(g, x)| {
                let d = self.coproduct_extend(&x);
                let left = self.coproduct_on_leg(&d, 0);
                let right = self.coproduct_on_leg(&d, 1);
                CheckResult::tensor_zero("coassociativity", Some(g.to_string()), &(&left - &right))
            }),
        )
    }

    pub fn check_counit(&self) -> CheckResult {
        CheckResult::all(
            "counit",
            self.generators().into_iter().map(|(g, x)| {
                let d = self.coproduct_extend(&x);
                let l = d.counit_leg(0).to_algebra().expect("one leg");
                let r = d.counit_leg(1).to_algebra().expect("one leg");
                let bad = if l != x { &l - &x } else { &r - &x };
                CheckResult::algebra_zero("counit", Some(g.to_string()), &bad)
            }),
        )
    }

    pub fn check_antipode_axiom(&self) -> CheckResult {
        CheckResult::all(
            "antipode",
            self.generators().into_iter().map(|(g, x)| {
                let d = self.coproduct_extend(&x);
                let unit = AlgebraElement::scalar(&self.alg, counit(&x));
                let l = d.map_leg_algebra(0, &|m| self.antipode_monomial(m)).multiply().expect("two legs");
                let r = d.map_leg_algebra(1, &|m| self.antipode_monomial(m)).multiply().expect("two legs");
                let bad = if l != unit { &l - &unit } else { &r - &unit };
                CheckResult::algebra_zero("antipode", Some(g.to_string()), &bad)
            }),
        )
    }

    pub fn check_antipode_antihomomorphism(&self) -> CheckResult {
        let n = self.order;
        CheckResult::all(
            "antipode-antihomomorphism",
            self.pairs().into_iter().map(|(x, y)| {
                let br = AlgebraElement::from_lie(&self.alg, self.alg.structure().get(x, y), n);
                let lhs = self.antipode_extend(&br);
                let (sx, sy) = (&self.antipode[x as usize], &self.antipode[y as usize]);
                let rhs = sy.commutator(sx);
                CheckResult::algebra_zero("antipode-antihomomorphism", Some(self.pair_label(x, y)), &(&lhs - &rhs))
            }),
        )
    }

    /// `S²(x) = Π_τ^{D−1} x Π_τ^{1−D}`.
    pub fn check_antipode_square(&self) -> CheckResult {
        let k = self.dim() - 1;
        let (a, b) = (self.pi.pow(k), self.pi_inv.pow(k));
        CheckResult::all(
            "antipode-square",
            self.generators().into_iter().map(|(g, x)| {
                let s2 = self.antipode_extend(&self.antipode_extend(&x));
                let conj = &(&a * &x) * &b;
                CheckResult::algebra_zero("antipode-square", Some(g.to_string()), &(&s2 - &conj))
            }),
        )
    }

    pub fn check_group_like(&self) -> CheckResult {
        let a = &self.coproduct_extend(&self.pi) - &TensorElement::pair(&self.pi, &self.pi);
        if !a.is_zero() {
            return CheckResult::fail("group-like", Some("Π_τ".into()), Residual::tensor(&a));
        }
        let b = &self.coproduct_extend(&self.pi_inv) - &TensorElement::pair(&self.pi_inv, &self.pi_inv);
        CheckResult::tensor_zero("group-like", Some("Π_τ⁻¹".into()), &b)
    }

    /// `i·[h¹](Δ_τ − Δ_τ^op)(x) = [Δ₀(x), r_τ]`.
    pub fn check_classical_limit(&self) -> CheckResult {
        let r = self.r_tensor();
        CheckResult::all(
            "classical-limit",
            self.generators().into_iter().map(|(g, x)| {
                let d = self.coproduct_extend(&x);
                let lhs = (&d - &d.flip()).h_coefficient(1).scale(&GaussRational::i());
                let d0 = self.primitive_coproduct(&x);
                let rhs = &(&d0 * &r) - &(&r * &d0);
                CheckResult::tensor_zero("classical-limit", Some(g.to_string()), &(&lhs - &rhs))
            }),
        )
    }

    /// `Δ(x)^{*⊗*} = Δ(x*)`; generators are self-adjoint.
    pub fn check_star(&self) -> CheckResult {
        let mut cases = self.generators();
        let (m, p) = (&cases[0].1, &cases[cases.len() - 1].1);
        let composite = (m * p).scale(&GaussRational::i());
        cases.push((cases[0].0, composite));
        CheckResult::all(
            "star",
            cases.into_iter().map(|(g, x)| {
                let lhs = star_tensor(&self.coproduct_extend(&x));
                let rhs = self.coproduct_extend(&x.star());
                CheckResult::tensor_zero("star", Some(g.to_string()), &(&lhs - &rhs))
            }),
        )
    }

    /// `τ → sτ`, `h → h/s` leaves every generator coproduct unchanged.
    pub fn check_rescaling(&self) -> CheckResult {
        let mut results = Vec::new();
        for s in [2i64, -3] {
            let s = int(s);
            let scaled = match DeformationContext::with_algebra(&self.alg, self.tau.scaled(self.metric(), &s), self.order) {
                Ok(c) => c,
                Err(e) => return CheckResult::fail("rescaling", None, Residual::Message(e.to_string())),
            };
            let inv = Rational::from_integer(1.into()) / &s;
            for (i, &g) in self.alg.basis().generators().iter().enumerate() {
                let diff = &scaled.delta[i].rescale_h(&inv) - &self.delta[i];
                results.push(CheckResult::tensor_zero("rescaling", Some(format!("{g} (s = {s})")), &diff));
            }
        }
        CheckResult::all("rescaling", results)
    }

    /// The ten Hopf-structure checks.
    pub fn verify_hopf(&self) -> VerificationReport {
        let start = Instant::now();
        let checks: Vec<fn(&DeformationContext) -> CheckResult> = vec![
            Self::check_homomorphism,
            Self::check_coassociativity,
            Self::check_counit,
            Self::check_antipode_axiom,
            Self::check_antipode_antihomomorphism,
            Self::check_antipode_square,
            Self::check_group_like,
            Self::check_classical_limit,
            Self::check_star,
            Self::check_rescaling,
        ];
        let results: Vec<CheckResult> = std::thread::scope(|scope| {
            let handles: Vec<_> = checks.iter().map(|f| scope.spawn(move || f(self))).collect();
            handles.into_iter().map(|h| h.join().expect("check panicked")).collect()
        });
        let mut report = VerificationReport::new("hopf");
        for r in results {
            report.push(r);
        }
        report.elapsed = start.elapsed();
        report
    }

    /// Identities among the derived elements themselves.
    pub fn verify_consistency(&self) -> VerificationReport {
        let start = Instant::now();
        let mut report = VerificationReport::new("consistency");
        let n = self.order;
        let closed = self.pi_tau_inv_closed_form();
        report.push(CheckResult::algebra_zero("pi-inverse-routes", None, &(&closed - &self.pi_inv)));
        report.push(CheckResult::algebra_zero(
            "pi-times-inverse",
            None,
            &(&(&self.pi * &self.pi_inv) - &self.one()),
        ));
        // C = C_τ (1 + (τ²/4) h² C_τ)
        let quarter = self.tau.square() * crate::scalar::rat(1, 4);
        let inv_rhs = &self.c_tau * &(&self.one() + &self.c_tau.shift_h(2).scale_rational(&quarter));
        report.push(CheckResult::algebra_zero("casimir-inversion", None, &(&inv_rhs - &self.casimir)));
        // 1 − (τ²/2) h² C_τ Π⁻¹ − h P_τ Π⁻¹ = Π⁻¹
        let half_sq = self.tau.square() * crate::scalar::rat(1, 2);
        let aux = &(&self.one() - &(&self.c_tau * &self.pi_inv).shift_h(2).scale_rational(&half_sq))
            - &(&self.p_tau * &self.pi_inv).shift_h(1);
        report.push(CheckResult::algebra_zero("auxiliary-identity", None, &(&aux - &self.pi_inv)));
        let eps = counit(&self.pi);
        report.push(if eps == HSeries::one(n) {
            CheckResult::pass("counit-pi")
        } else {
            CheckResult::fail("counit-pi", None, Residual::Scalar(eps))
        });
        let s_pi = self.antipode_extend(&self.pi);
        report.push(CheckResult::algebra_zero("antipode-pi", None, &(&s_pi - &self.pi_inv)));
        let sq = &self.coproduct_extend(&self.sqrt) - &self.sqrt_coproduct_formula();
        report.push(CheckResult::tensor_zero("sqrt-coproduct", None, &sq));
        let cached = [&self.p_tau, &self.casimir, &self.sqrt, &self.pi, &self.pi_inv, &self.c_tau];
        let commuting = cached
            .iter()
            .enumerate()
            .flat_map(|(i, a)| cached[i + 1..].iter().map(move |b| a.commutator(b)))
            .find(|c| !c.is_zero());
        report.push(match commuting {
            None => CheckResult::pass("momentum-series-commute"),
            Some(c) => CheckResult::fail("momentum-series-commute", None, Residual::algebra(&c)),
        });
        let central = self
            .generators()
            .into_iter()
            .map(|(g, x)| CheckResult::algebra_zero("c-tau-central", Some(g.to_string()), &self.c_tau.commutator(&x)));
        report.push(CheckResult::all("c-tau-central", central));
        let stab = stability_generators(&self.alg, &self.tau, n)
            .into_iter()
            .map(|x| {
                let d = &self.coproduct_extend(&x) - &self.primitive_coproduct(&x);
                CheckResult::tensor_zero("stability-primitive", Some(x.to_string()), &d)
            })
            .collect::<Vec<_>>();
        report.push(CheckResult::all("stability-primitive", stab));
        report.elapsed = start.elapsed();
        report
    }
}

impl TensorElement {
    fn scale_rational_tensor(&self, q: &Rational) -> TensorElement {
        self.scale(&GaussRational::real(q.clone()))
    }
}

pub(crate) fn pow_rational(q: &Rational, k: usize) -> Rational {
    let mut acc = Rational::from_integer(1.into());
    for _ in 0..k {
        acc *= q;
    }
    acc
}

/// `ε(a)`: the coefficient of the empty monomial.
pub fn counit(a: &AlgebraElement) -> HSeries {
    a.constant_term()
}

/// Leg-wise star without leg exchange: `(a⊗b)* = a*⊗b*`.
pub fn star_tensor(t: &TensorElement) -> TensorElement {
    let alg = t.algebra().clone();
    let order = t.order();
    let mut out = t.conj_coeffs();
    for leg in 0..t.legs() {
        out = out.map_leg_algebra(leg, &|m| {
            // Linear part of the star: reverse the word and re-order.
            AlgebraElement::from_monomial(&alg, m.clone(), HSeries::one(order)).star()
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn time_like(order: usize) -> DeformationContext {
        DeformationContext::from_ints(Metric::minkowski(4), &[1, 0, 0, 0], order).unwrap()
    }

    fn p(ctx: &DeformationContext, mu: usize) -> AlgebraElement {
        AlgebraElement::momentum(ctx.algebra(), mu, ctx.order())
    }

    #[test]
    fn pi_for_null_tau_terminates() {
        let ctx = DeformationContext::from_ints(Metric::minkowski(4), &[1, 0, 0, 1], 4).unwrap();
        let want = &AlgebraElement::one(ctx.algebra(), 4) + &ctx.p_tau().shift_h(1);
        assert_eq!(ctx.pi_tau(), &want);
        assert_eq!(ctx.c_tau(), ctx.casimir());
        // Π⁻¹ = 1 − hP_τ + h²P_τ² − h³P_τ³ + h⁴P_τ⁴
        let mut geo = AlgebraElement::zero(ctx.algebra(), 4);
        for k in 0..=4 {
            let sign = GaussRational::from_int(if k % 2 == 0 { 1 } else { -1 });
            geo = &geo + &ctx.p_tau().pow(k).shift_h(k).scale(&sign);
        }
        assert_eq!(ctx.pi_tau_inv(), &geo);
    }

    #[test]
    fn pi_time_like() {
        // τ² = −1, N = 3: Π = 1 + hP_0 − (h²/2)C.
        let ctx = time_like(3);
        let want = &(&AlgebraElement::one(ctx.algebra(), 3) + &p(&ctx, 0).shift_h(1))
            - &ctx.casimir().shift_h(2).scale(&GaussRational::from_ratio(1, 2));
        assert_eq!(ctx.pi_tau(), &want);
    }

    #[test]
    fn pi_inverse_time_like_second_order() {
        // Π⁻¹ = 1 − hP_0 + h²(P_0² + C/2) + O(h³).
        let ctx = time_like(2);
        let p0 = p(&ctx, 0);
        let want = &(&AlgebraElement::one(ctx.algebra(), 2) - &p0.shift_h(1))
            + &(&(&p0 * &p0) + &ctx.casimir().scale(&GaussRational::from_ratio(1, 2))).shift_h(2);
        assert_eq!(ctx.pi_tau_inv(), &want);
        assert!(ctx.pi_tau_inv_checked().is_ok());
    }

    #[test]
    fn c_tau_second_order() {
        // C_τ = C − (τ²/4) h² C² + O(h⁴) for τ = (0,0,0,1), τ² = 1.
        let ctx = DeformationContext::from_ints(Metric::minkowski(4), &[0, 0, 0, 1], 3).unwrap();
        let c = ctx.casimir();
        let want = c - &(c * c).shift_h(2).scale_rational(&rat(1, 4));
        assert_eq!(ctx.c_tau(), &want);
    }

    #[test]
    fn spatial_momentum_coproduct() {
        let ctx = time_like(3);
        let one = AlgebraElement::one(ctx.algebra(), 3);
        let p1 = p(&ctx, 1);
        let want = &TensorElement::pair(&p1, ctx.pi_tau()) + &TensorElement::pair(&one, &p1);
        assert_eq!(ctx.coproduct(Generator::Momentum(1)).unwrap(), want);
        // To first order: P_1⊗1 + 1⊗P_1 + h P_1⊗P_0.
        let first = ctx.coproduct(Generator::Momentum(1)).unwrap().with_order(1);
        let (one1, p1_1, p0_1) = (one.with_order(1), p1.with_order(1), p(&ctx, 0).with_order(1));
        let want1 = &(&TensorElement::pair(&p1_1, &one1) + &TensorElement::pair(&one1, &p1_1))
            + &TensorElement::pair(&p1_1, &p0_1).shift_h(1);
        assert_eq!(first, want1);
    }

    #[test]
    fn zero_tau_is_undeformed() {
        let ctx = DeformationContext::from_ints(Metric::minkowski(3), &[0, 0, 0], 2).unwrap();
        for g in ctx.algebra().basis().generators().to_vec() {
            let x = AlgebraElement::generator(ctx.algebra(), g, 2).unwrap();
            assert_eq!(ctx.coproduct(g).unwrap(), ctx.primitive_coproduct(&x));
            assert_eq!(ctx.antipode(g).unwrap(), x.scale(&GaussRational::from_int(-1)));
        }
        assert!(ctx.orbit().is_none());
    }

    #[test]
    fn specialized_antipodes() {
        let ctx = time_like(3);
        let p1 = p(&ctx, 1);
        assert_eq!(
            ctx.antipode(Generator::Momentum(1)).unwrap(),
            (&p1 * ctx.pi_tau_inv()).scale(&GaussRational::from_int(-1))
        );
        let m12 = AlgebraElement::rotation(ctx.algebra(), 1, 2, 3);
        assert_eq!(ctx.antipode(Generator::Rotation(1, 2)).unwrap(), m12.scale(&GaussRational::from_int(-1)));
    }

    #[test]
    fn counit_examples() {
        let ctx = time_like(2);
        assert_eq!(counit(&AlgebraElement::one(ctx.algebra(), 2)), HSeries::one(2));
        let x = &p(&ctx, 0) + &AlgebraElement::rotation(ctx.algebra(), 0, 1, 2).scale(&GaussRational::from_int(3));
        assert!(counit(&x).is_zero());
        assert_eq!(counit(ctx.pi_tau()), HSeries::one(2));
    }

    #[test]
    fn star_examples() {
        let ctx = time_like(2);
        let a = ctx.algebra();
        let p0 = p(&ctx, 0);
        assert_eq!(p0.scale(&GaussRational::i()).star(), p0.scale(&(GaussRational::from_int(0) - GaussRational::i())));
        let m01 = AlgebraElement::rotation(a, 0, 1, 2);
        let want = &(&m01 * &p0) - &p(&ctx, 1).scale(&GaussRational::i());
        assert_eq!((&m01 * &p0).star(), want);
        assert_eq!(ctx.pi_tau().star(), *ctx.pi_tau());
    }

    #[test]
    fn consistency_time_like() {
        let r = time_like(3).verify_consistency();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn literal_sqrt_coproduct_is_inconsistent() {
        // The variant with last term −hτ² P_τΠ⁻¹⊗P_τ does not match Δ(√).
        let ctx = DeformationContext::from_ints(Metric::minkowski(3), &[0, 0, 1], 2).unwrap();
        let mut literal = &TensorElement::pair(ctx.sqrt_term(), ctx.pi_tau())
            - &TensorElement::pair(ctx.pi_tau_inv(), ctx.p_tau()).shift_h(1);
        literal = &literal
            + &ctx.contract_with_momenta(|a| AlgebraElement::momentum(ctx.algebra(), a, 2)).shift_h(2);
        literal = &literal - &TensorElement::pair(&(ctx.p_tau() * ctx.pi_tau_inv()), ctx.p_tau()).shift_h(1);
        assert_ne!(ctx.coproduct_extend(ctx.sqrt_term()), literal);
        assert_eq!(ctx.coproduct_extend(ctx.sqrt_term()), ctx.sqrt_coproduct_formula());
    }

    #[test]
    fn hopf_suite_small() {
        let ctx = DeformationContext::from_ints(Metric::minkowski(3), &[1, 0, 0], 2).unwrap();
        let r = ctx.verify_hopf();
        assert!(r.passed(), "{r}");
    }
}
