//! The null case in a light-cone basis `(e_+, e_a, e_−)` with `e_+ = τ`,
//! `g_{+−} = 1`: the structure constants of the `2 + (D−2)` splitting, the
//! extended Jordanian twist
//! `F = exp(−i M_{+−} ⊗ ln Π_+) exp(−ih M_{+a} ⊗ P^a Π_+⁻¹)`
//! and its triangular R-matrix `R = F₂₁ F⁻¹`.
//!
//! Index `0` is `+`, index `D−1` is `−`, and `1..D−1` are transverse.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use num_traits::Zero;

use crate::algebra::{raised_momentum, Algebra, AlgebraElement, VectorTau};
use crate::basis::{is_lightcone_adapted, lightcone_decompose};
use crate::error::{Error, Result};
use crate::hopf::DeformationContext;
use crate::lie::Generator;
use crate::metric::Metric;
use crate::pbw::Monomial;
use crate::report::{CheckResult, Residual, VerificationReport};
use crate::scalar::{int, rat, GaussRational, Rational};
use crate::tensor::{Placement, TensorElement};

fn minus_i() -> GaussRational {
    -GaussRational::i()
}

fn i_times(q: &Rational) -> GaussRational {
    GaussRational::real(q.clone()).times_i()
}

/// Index helpers for a light-cone basis of dimension `D`.
#[derive(Clone, Copy, Debug)]
struct LightCone {
    d: usize,
}

impl LightCone {
    const PLUS: usize = 0;

    fn minus(self) -> usize {
        self.d - 1
    }

    fn transverse(self) -> std::ops::Range<usize> {
        1..self.d - 1
    }
}

fn require_lightcone(ctx: &DeformationContext) -> Result<LightCone> {
    if !ctx.tau().square().is_zero() || ctx.tau().is_zero() {
        return Err(Error::NonNullTau("the twist exists only for a null τ".into()));
    }
    if !is_lightcone_adapted(ctx.metric(), ctx.tau()) {
        return Err(Error::Invalid("basis is not a light-cone basis with τ = e_+".into()));
    }
    Ok(LightCone { d: ctx.dim() })
}

/// The twist, its inverse, the R-matrix and both factorizations.
#[derive(Clone, Debug)]
pub struct TwistData {
    pub f: TensorElement,
    pub f_inv: TensorElement,
    pub r: TensorElement,
    /// `exp(−ih M_{+a} ⊗ P^a) exp(−i M_{+−} ⊗ ln Π_+)`.
    pub f_reversed: TensorElement,
    /// `exp(−i M_{+−} ⊗ ln Π_+)`.
    pub jordanian: TensorElement,
    /// `exp(−ih M_{+a} ⊗ P^a Π_+⁻¹)`.
    pub extension: TensorElement,
}

/// Evaluate both factorizations; a mismatch is a defect.
pub fn build_twist(ctx: &DeformationContext) -> Result<TwistData> {
    let lc = require_lightcone(ctx)?;
    let alg = ctx.algebra();
    let n = ctx.order();
    let ln_pi = ctx.pi_tau().ln()?;
    let m_pm = AlgebraElement::rotation(alg, LightCone::PLUS, lc.minus(), n);
    let jordanian = TensorElement::pair(&m_pm, &ln_pi).scale(&minus_i()).exp()?;
    let mut ext = TensorElement::zero(alg, 2, n);
    let mut ext_plain = TensorElement::zero(alg, 2, n);
    for a in lc.transverse() {
        let m = AlgebraElement::rotation(alg, LightCone::PLUS, a, n);
        let up = raised_momentum(alg, a, n);
        ext = &ext + &TensorElement::pair(&m, &(&up * ctx.pi_tau_inv()));
        ext_plain = &ext_plain + &TensorElement::pair(&m, &up);
    }
    let extension = ext.shift_h(1).scale(&minus_i()).exp()?;
    let f = &jordanian * &extension;
    let f_reversed = &ext_plain.shift_h(1).scale(&minus_i()).exp()? * &jordanian;
    if f != f_reversed {
        return Err(Error::Defect("the two factorizations of the twist differ".into()));
    }
    let f_inv = f.invert()?;
    let r = &f.flip() * &f_inv;
    Ok(TwistData { f, f_inv, r, f_reversed, jordanian, extension })
}

/// `Δ₀` on monomials, memoized.
struct Primitive {
    alg: Arc<Algebra>,
    order: usize,
    cache: Mutex<HashMap<Monomial, TensorElement>>,
}

impl Primitive {
    fn new(alg: &Arc<Algebra>, order: usize) -> Primitive {
        Primitive { alg: alg.clone(), order, cache: Mutex::new(HashMap::new()) }
    }

    fn monomial(&self, m: &Monomial) -> TensorElement {
        if let Some(t) = self.cache.lock().unwrap().get(m) {
            return t.clone();
        }
        let n = self.order;
        let out = match m.split_last() {
            None => TensorElement::one(&self.alg, 2, n),
            Some((&last, prefix)) => {
                let x = AlgebraElement::from_index(&self.alg, last, n);
                let one = AlgebraElement::one(&self.alg, n);
                let dx = &TensorElement::pair(&x, &one) + &TensorElement::pair(&one, &x);
                &self.monomial(&Monomial::from_slice(prefix)) * &dx
            }
        };
        self.cache.lock().unwrap().insert(m.clone(), out.clone());
        out
    }
}

/// The coproducts of the light-cone generators written out in reduced form.
pub fn reduced_coproduct(ctx: &DeformationContext, g: Generator) -> Result<TensorElement> {
    let lc = require_lightcone(ctx)?;
    let alg = ctx.algebra();
    let n = ctx.order();
    let one = AlgebraElement::one(alg, n);
    let pi = ctx.pi_tau();
    let pi_inv = ctx.pi_tau_inv();
    let minus = lc.minus();
    let pair = TensorElement::pair;
    let primitive = |x: &AlgebraElement| &pair(x, &one) + &pair(&one, x);
    // (P_− + (h/2) C_+) Π_+⁻¹
    let p_minus = AlgebraElement::momentum(alg, minus, n);
    let shifted = &(&p_minus + &ctx.casimir().shift_h(1).scale_rational(&rat(1, 2))) * pi_inv;
    let with_pa = |right: &dyn Fn(usize) -> AlgebraElement| {
        let mut t = TensorElement::zero(alg, 2, n);
        for a in lc.transverse() {
            t = &t + &pair(&(&raised_momentum(alg, a, n) * pi_inv), &right(a));
        }
        t.shift_h(1)
    };
    Ok(match g {
        Generator::Momentum(mu) => {
            let p = AlgebraElement::momentum(alg, mu, n);
            if mu == minus {
                let mut t = &pair(&p, pi) + &pair(pi_inv, &p);
                t = &t - &pair(&shifted, &AlgebraElement::momentum(alg, LightCone::PLUS, n)).shift_h(1);
                &t - &with_pa(&|a| AlgebraElement::momentum(alg, a, n))
            } else {
                &pair(&p, pi) + &pair(&one, &p)
            }
        }
        Generator::Rotation(mu, nu) => {
            let m = AlgebraElement::rotation(alg, mu, nu, n);
            if mu == LightCone::PLUS && nu == minus {
                let t = &pair(&m, &one) + &pair(pi_inv, &m);
                &t - &with_pa(&|a| AlgebraElement::rotation(alg, LightCone::PLUS, a, n))
            } else if nu == minus {
                // M_{μ,−} = −M_{−μ} with μ transverse.
                let a = mu;
                let m_ma = AlgebraElement::rotation(alg, minus, a, n);
                let mut t = &pair(&m_ma, &one) + &pair(pi_inv, &m_ma);
                t = &t - &pair(&shifted, &AlgebraElement::rotation(alg, LightCone::PLUS, a, n)).shift_h(1);
                t = &t - &with_pa(&|b| AlgebraElement::rotation(alg, b, a, n));
                t.scale(&GaussRational::from_int(-1))
            } else {
                primitive(&m)
            }
        }
    })
}

/// Brackets of the light-cone basis and the pushforward from the original
/// coordinates.
pub fn lc_structure_check(g: &Metric, tau: &VectorTau) -> Result<VerificationReport> {
    let start = Instant::now();
    let b = lightcone_decompose(g, tau)?;
    let alg = Algebra::new(b.target_metric().clone());
    let lc = LightCone { d: g.dim() };
    let gt = b.target_metric();
    let (p, m) = (LightCone::PLUS, lc.minus());
    let rot = |x: usize, y: usize| AlgebraElement::rotation(&alg, x, y, 0);
    let mom = |x: usize| AlgebraElement::momentum(&alg, x, 0);
    let mut report = VerificationReport::new("lightcone-structure");
    let mut out = Vec::new();
    let mut expect = |label: String, lhs: AlgebraElement, rhs: AlgebraElement| {
        out.push(CheckResult::algebra_zero("lightcone-brackets", Some(label), &(&lhs - &rhs)));
    };
    let zero = AlgebraElement::zero(&alg, 0);
    for s in [p, m] {
        let sign = if s == p { 1 } else { -1 };
        let other = if s == p { m } else { p };
        expect(format!("[M_+-, P_{s}]"), rot(p, m).commutator(&mom(s)), mom(s).scale(&GaussRational::new(int(0), int(sign))));
        for a in lc.transverse() {
            expect(
                format!("[M_+-, M_{s}{a}]"),
                rot(p, m).commutator(&rot(s, a)),
                rot(s, a).scale(&GaussRational::new(int(0), int(sign))),
            );
            expect(format!("[M_{s}{a}, P_{s}]"), rot(s, a).commutator(&mom(s)), zero.clone());
            expect(format!("[M_{s}{a}, P_{other}]"), rot(s, a).commutator(&mom(other)), mom(a).scale(&minus_i()));
            for bb in lc.transverse() {
                expect(format!("[M_{s}{a}, M_{s}{bb}]"), rot(s, a).commutator(&rot(s, bb)), zero.clone());
                expect(format!("[M_{s}{a}, P_{bb}]"), rot(s, a).commutator(&mom(bb)), mom(s).scale(&i_times(gt.g(a, bb))));
                for c in lc.transverse() {
                    let rhs = &rot(s, c).scale(&i_times(gt.g(a, bb))) - &rot(s, bb).scale(&i_times(gt.g(a, c)));
                    expect(format!("[M_{s}{a}, M_{bb}{c}]"), rot(s, a).commutator(&rot(bb, c)), rhs);
                }
            }
        }
    }
    for a in lc.transverse() {
        expect(format!("[M_+-, P_{a}]"), rot(p, m).commutator(&mom(a)), zero.clone());
        for bb in lc.transverse() {
            let rhs = (&rot(a, bb) + &rot(p, m).scale_rational(gt.g(a, bb))).scale(&minus_i());
            expect(format!("[M_+{a}, M_-{bb}]"), rot(p, a).commutator(&rot(m, bb)), rhs);
        }
    }
    report.push(CheckResult::all("lightcone-brackets", out));
    report.push(b.check_brackets());
    report.push(gamma_abelian(&alg, lc, 0));
    report.elapsed = start.elapsed();
    Ok(report)
}

/// `Γ_+ = {M_{+−}, P^a}` and `Γ_− = {P_+, M_{+a}}` are Abelian.
fn gamma_abelian(alg: &Arc<Algebra>, lc: LightCone, n: usize) -> CheckResult {
    let mut plus = vec![AlgebraElement::rotation(alg, LightCone::PLUS, lc.minus(), n)];
    let mut minus = vec![AlgebraElement::momentum(alg, LightCone::PLUS, n)];
    for a in lc.transverse() {
        plus.push(raised_momentum(alg, a, n));
        minus.push(AlgebraElement::rotation(alg, LightCone::PLUS, a, n));
    }
    let mut out = Vec::new();
    for (label, set) in [("Γ_+", &plus), ("Γ_-", &minus)] {
        for i in 0..set.len() {
            for j in i + 1..set.len() {
                out.push(CheckResult::algebra_zero("gamma-abelian", Some(label.to_string()), &set[i].commutator(&set[j])));
            }
        }
    }
    CheckResult::all("gamma-abelian", out)
}

/// Twist identities, the R-matrix and the reduced light-cone formulas,
/// exactly modulo `h^{N+1}`.
pub fn verify_twist(ctx: &DeformationContext) -> Result<VerificationReport> {
    let start = Instant::now();
    let lc = require_lightcone(ctx)?;
    let alg = ctx.algebra();
    let n = ctx.order();
    let mut report = VerificationReport::new("twist");
    let tw = match build_twist(ctx) {
        Ok(tw) => tw,
        Err(Error::Defect(msg)) => {
            report.push(CheckResult::fail("factorizations", None, Residual::Message(msg)));
            report.elapsed = start.elapsed();
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    let one2 = TensorElement::one(alg, 2, n);
    let one1 = TensorElement::one(alg, 1, n);
    let gens: Vec<Generator> = alg.basis().generators().to_vec();

    report.push(CheckResult::tensor_zero("factorizations", None, &(&tw.f - &tw.f_reversed)));
    report.push(CheckResult::tensor_zero("twist-inverse", None, &(&(&tw.f * &tw.f_inv) - &one2)));
    report.push(CheckResult::all(
        "twist-counital",
        [0, 1].map(|leg| {
            CheckResult::tensor_zero("twist-counital", Some(format!("leg {}", leg + 1)), &(&tw.f.counit_leg(leg) - &one1))
        }),
    ));

    let prim = Primitive::new(alg, n);
    let left = &tw.f.embed(Placement::L12)? * &tw.f.map_leg(0, &|m| prim.monomial(m));
    let right = &tw.f.embed(Placement::L23)? * &tw.f.map_leg(1, &|m| prim.monomial(m));
    report.push(CheckResult::tensor_zero("cocycle", None, &(&left - &right)));

    let delta_lc: Vec<TensorElement> = gens
        .iter()
        .map(|&g| {
            let idx = alg.basis().index(g).expect("basis");
            &(&tw.f * &prim.monomial(&Monomial::from_slice(&[idx]))) * &tw.f_inv
        })
        .collect();
    report.push(CheckResult::all(
        "twisted-coproduct",
        gens.iter().zip(&delta_lc).map(|(&g, d)| {
            let want = ctx.coproduct(g).expect("basis").flip();
            CheckResult::tensor_zero("twisted-coproduct", Some(g.to_string()), &(d - &want))
        }),
    ));

    let r_inv = &tw.f * &tw.f_inv.flip();
    let mut intertwine = vec![CheckResult::algebra_zero("r-intertwines", Some("C_+ = C".into()), &(ctx.c_tau() - ctx.casimir()))];
    for (&g, d) in gens.iter().zip(&delta_lc) {
        let lhs = &(&tw.r * d) * &r_inv;
        intertwine.push(CheckResult::tensor_zero(
            "r-intertwines",
            Some(g.to_string()),
            &(&lhs - &ctx.coproduct(g).expect("basis")),
        ));
    }
    report.push(CheckResult::all("r-intertwines", intertwine));

    report.push(CheckResult::all(
        "reduced-coproducts",
        gens.iter().map(|&g| {
            let want = reduced_coproduct(ctx, g).expect("light-cone context");
            CheckResult::tensor_zero("reduced-coproducts", Some(g.to_string()), &(&ctx.coproduct(g).expect("basis") - &want))
        }),
    ));

    // P_− + C/(2κ) = P_− Π_+ + P^a P_a / (2κ).
    let p_minus = AlgebraElement::momentum(alg, lc.minus(), n);
    let mut transverse_sq = AlgebraElement::zero(alg, n);
    for a in lc.transverse() {
        transverse_sq = &transverse_sq + &(&raised_momentum(alg, a, n) * &AlgebraElement::momentum(alg, a, n));
    }
    let half = rat(1, 2);
    let lhs = &p_minus + &ctx.casimir().shift_h(1).scale_rational(&half);
    let rhs = &(&p_minus * ctx.pi_tau()) + &transverse_sq.shift_h(1).scale_rational(&half);
    report.push(CheckResult::algebra_zero("casimir-identity", None, &(&lhs - &rhs)));

    report.push(partial_majid_ruegg(ctx, lc)?);

    let r21 = tw.r.flip();
    report.push(CheckResult::tensor_zero("triangularity", None, &(&(&r21 * &tw.r) - &one2)));

    let (r12, r13, r23) = (tw.r.embed(Placement::L12)?, tw.r.embed(Placement::L13)?, tw.r.embed(Placement::L23)?);
    let qybe = &(&(&r12 * &r13) * &r23) - &(&(&r23 * &r13) * &r12);
    report.push(CheckResult::tensor_zero("quantum-yang-baxter", None, &qybe));

    report.push(gamma_abelian(alg, lc, n));

    let mut stab = Vec::new();
    for &g in &gens {
        let x = AlgebraElement::generator(alg, g, n).expect("basis");
        let one = AlgebraElement::one(alg, n);
        let is_prim = (&ctx.coproduct(g).expect("basis") - &(&TensorElement::pair(&x, &one) + &TensorElement::pair(&one, &x))).is_zero();
        let expected = match g {
            Generator::Momentum(_) => false,
            // M_{ab} and M_{+a}.
            Generator::Rotation(_, nu) => nu != lc.minus(),
        };
        if is_prim != expected {
            stab.push(CheckResult::fail(
                "stability-primitive",
                Some(g.to_string()),
                Residual::Message(format!("primitive = {is_prim}, expected {expected}")),
            ));
        }
    }
    report.push(CheckResult::all("stability-primitive", stab));
    report.elapsed = start.elapsed();
    Ok(report)
}

/// With `P̃_+ = κ ln Π_+` and `P̃_a = P_a Π_+⁻¹`.
pub struct PartialMrGenerators {
    pub p_plus: AlgebraElement,
    pub momenta: Vec<AlgebraElement>,
    /// `exp(−P̃_+/κ)`.
    pub damping: AlgebraElement,
    /// `κ(1 − exp(−P̃_+/κ))`.
    pub kappa_gap: AlgebraElement,
}

pub fn partial_mr_generators(ctx: &DeformationContext) -> Result<PartialMrGenerators> {
    let lc = require_lightcone(ctx)?;
    let n = ctx.order();
    let hi = ctx.at_order(n + 1)?;
    let ln_hi = hi.pi_tau().ln()?;
    let p_plus = ln_hi.div_h(1)?;
    let damping = p_plus.shift_h(1).scale(&GaussRational::from_int(-1)).exp()?;
    let gap_hi = &AlgebraElement::one(hi.algebra(), n + 1) - &ln_hi.scale(&GaussRational::from_int(-1)).exp()?;
    let kappa_gap = gap_hi.div_h(1)?;
    let momenta = lc
        .transverse()
        .map(|a| &AlgebraElement::momentum(ctx.algebra(), a, n) * ctx.pi_tau_inv())
        .collect();
    Ok(PartialMrGenerators { p_plus, momenta, damping, kappa_gap })
}

fn partial_majid_ruegg(ctx: &DeformationContext, lc: LightCone) -> Result<CheckResult> {
    let alg = ctx.algebra();
    let n = ctx.order();
    let g = ctx.metric();
    let mr = partial_mr_generators(ctx)?;
    let (p, m) = (LightCone::PLUS, lc.minus());
    let rot = |x: usize, y: usize| AlgebraElement::rotation(alg, x, y, n);
    let pt = |a: usize| &mr.momenta[a - 1];
    let one = AlgebraElement::one(alg, n);
    let gap = &one - &mr.damping;
    let mut out = Vec::new();
    let mut expect = |label: String, diff: AlgebraElement| out.push(CheckResult::algebra_zero("partial-majid-ruegg", Some(label), &diff));

    expect("[M_+-, P̃_+]".into(), &rot(p, m).commutator(&mr.p_plus) - &mr.kappa_gap.scale(&GaussRational::i()));
    for a in lc.transverse() {
        expect(format!("[M_+{a}, P̃_+]"), rot(p, a).commutator(&mr.p_plus));
        expect(format!("[M_+-, P̃_{a}]"), &rot(p, m).commutator(pt(a)) - &(pt(a) * &gap).scale(&minus_i()));
        expect(format!("[M_-{a}, P̃_+]"), &rot(m, a).commutator(&mr.p_plus) - &pt(a).scale(&minus_i()));
        for b in lc.transverse() {
            expect(format!("[M_+{a}, P̃_{b}]"), &rot(p, a).commutator(pt(b)) - &mr.kappa_gap.scale(&i_times(g.g(a, b))));
        }
    }

    let mut tensors = Vec::new();
    let hi = ctx.at_order(n + 1)?;
    let delta_pp = hi.coproduct_extend(&hi.pi_tau().ln()?).div_h(1)?;
    let pair = TensorElement::pair;
    let primitive = |x: &AlgebraElement| &pair(x, &one) + &pair(&one, x);
    tensors.push(CheckResult::tensor_zero("partial-majid-ruegg", Some("Δ(P̃_+)".into()), &(&delta_pp - &primitive(&mr.p_plus))));
    let mut tail = TensorElement::zero(alg, 2, n);
    for a in lc.transverse() {
        let want = &pair(&mr.damping, pt(a)) + &pair(pt(a), &one);
        tensors.push(CheckResult::tensor_zero(
            "partial-majid-ruegg",
            Some(format!("Δ(P̃_{a})")),
            &(&ctx.coproduct_extend(pt(a)) - &want),
        ));
        let mut up = AlgebraElement::zero(alg, n);
        for b in lc.transverse() {
            if !g.g_inv(a, b).is_zero() {
                up = &up + &pt(b).scale_rational(g.g_inv(a, b));
            }
        }
        tail = &tail + &pair(&up, &rot(p, a)).shift_h(1);
        tensors.push(CheckResult::tensor_zero(
            "partial-majid-ruegg",
            Some(format!("Δ(M_+{a})")),
            &(&ctx.coproduct_extend(&rot(p, a)) - &primitive(&rot(p, a))),
        ));
    }
    let want = &(&pair(&rot(p, m), &one) + &pair(&mr.damping, &rot(p, m))) - &tail;
    tensors.push(CheckResult::tensor_zero("partial-majid-ruegg", Some("Δ(M_+-)".into()), &(&ctx.coproduct_extend(&rot(p, m)) - &want)));
    out.extend(tensors);
    Ok(CheckResult::all("partial-majid-ruegg", out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::lightcone_decompose;

    fn lightcone_ctx(g: &Metric, t: &[i64], order: usize) -> DeformationContext {
        let tau = VectorTau::from_ints(g, t).unwrap();
        lightcone_decompose(g, &tau).unwrap().adapted_context(&tau, order).unwrap()
    }

    #[test]
    fn first_order_twist() {
        // F = 1⊗1 − ih(M_{+−}⊗P_+ + M_{+a}⊗P^a) + O(h²).
        let ctx = lightcone_ctx(&Metric::minkowski(3), &[1, 1, 0], 2);
        let tw = build_twist(&ctx).unwrap();
        let alg = ctx.algebra();
        let lc = LightCone { d: 3 };
        let mut r = TensorElement::pair(
            &AlgebraElement::rotation(alg, 0, lc.minus(), 2),
            &AlgebraElement::momentum(alg, 0, 2),
        );
        for a in lc.transverse() {
            r = &r + &TensorElement::pair(&AlgebraElement::rotation(alg, 0, a, 2), &raised_momentum(alg, a, 2));
        }
        let want = &TensorElement::one(alg, 2, 2) + &r.shift_h(1).scale(&minus_i());
        assert_eq!(tw.f.h_coefficient(0), TensorElement::one(alg, 2, 2));
        assert_eq!(tw.f.h_coefficient(1), want.h_coefficient(1));
    }

    #[test]
    fn twist_rejects_massive_tau() {
        let ctx = DeformationContext::from_ints(Metric::minkowski(3), &[1, 0, 0], 2).unwrap();
        assert!(matches!(build_twist(&ctx), Err(Error::NonNullTau(_))));
    }

    #[test]
    fn structure_lorentzian_and_kleinian() {
        let g = Metric::minkowski(4);
        let r = lc_structure_check(&g, &VectorTau::from_ints(&g, &[1, 0, 0, 1]).unwrap()).unwrap();
        assert!(r.passed(), "{r}");
        let k = Metric::diagonal(&[1, -1, 1, -1]).unwrap();
        let r = lc_structure_check(&k, &VectorTau::from_ints(&k, &[1, 1, 1, 1]).unwrap()).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn suite_small() {
        let ctx = lightcone_ctx(&Metric::minkowski(3), &[1, 1, 0], 2);
        let r = verify_twist(&ctx).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn literal_light_cone_relations_fail() {
        // With P̃_+ = ln Π_+ the printed [M_{+−}, P̃_+] = i(1 − exp(−P̃_+/κ))
        // and [M_{+−}, P̃_a] = +i P̃_a (1 − exp(−P̃_+/κ)) do not hold.
        let ctx = lightcone_ctx(&Metric::minkowski(3), &[1, 1, 0], 2);
        let alg = ctx.algebra();
        let m_pm = AlgebraElement::rotation(alg, 0, 2, 2);
        let ln_pi = ctx.pi_tau().ln().unwrap();
        let one = AlgebraElement::one(alg, 2);
        let literal_gap = &one - &ln_pi.shift_h(1).scale(&GaussRational::from_int(-1)).exp().unwrap();
        assert!(!(&m_pm.commutator(&ln_pi) - &literal_gap.scale(&GaussRational::i())).is_zero());
        let mr = partial_mr_generators(&ctx).unwrap();
        let pa = &mr.momenta[0];
        let gap = &one - &mr.damping;
        assert!(!(&m_pm.commutator(pa) - &(pa * &gap).scale(&GaussRational::i())).is_zero());
    }
}
