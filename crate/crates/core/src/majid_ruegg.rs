//! The Majid-Ruegg generators `P̃_τ = κ ln Π_τ`, `P̃_i = P_i Π_τ⁻¹` of a
//! deformation with `τ² ≠ 0`, in a basis with `e_0 = τ` and `g_{0i} = 0`.

use std::time::Instant;

use crate::algebra::AlgebraElement;
use crate::basis::is_orthogonal_adapted;
use crate::error::{Error, Result};
use crate::hopf::DeformationContext;
use crate::report::{CheckResult, VerificationReport};
use crate::scalar::{GaussRational, Rational};
use crate::tensor::TensorElement;

#[derive(Clone, Debug)]
pub struct MrGenerators {
    /// `P̃_τ`.
    pub p_tau: AlgebraElement,
    /// `P̃_i` for `i = 1, …, D−1`, stored at `i − 1`.
    pub momenta: Vec<AlgebraElement>,
    /// `P̃^i = g^{ij} P̃_j`.
    pub raised: Vec<AlgebraElement>,
    /// `exp(−P̃_τ / κ)`.
    pub damping: AlgebraElement,
}

impl MrGenerators {
    pub fn momentum(&self, i: usize) -> &AlgebraElement {
        &self.momenta[i - 1]
    }

    pub fn raised(&self, i: usize) -> &AlgebraElement {
        &self.raised[i - 1]
    }
}

fn require_adapted(ctx: &DeformationContext) -> Result<()> {
    if ctx.tau().square_sign() == 0 {
        return Err(Error::NullTau("the Majid-Ruegg generators need τ² ≠ 0".into()));
    }
    if !is_orthogonal_adapted(ctx.metric(), ctx.tau()) {
        return Err(Error::Invalid("basis is not adapted: need τ = e_0 and g_{0i} = 0".into()));
    }
    Ok(())
}

/// `P̃_τ` through the logarithm series of `Π_τ` one order higher, then an
/// exact division by `h`.
pub fn mr_generators(ctx: &DeformationContext) -> Result<MrGenerators> {
    require_adapted(ctx)?;
    let n = ctx.order();
    let hi = ctx.at_order(n + 1)?;
    let p_tau = hi.pi_tau().ln()?.div_h(1)?;
    let d = ctx.dim();
    let momenta: Vec<AlgebraElement> =
        (1..d).map(|i| &AlgebraElement::momentum(ctx.algebra(), i, n) * ctx.pi_tau_inv()).collect();
    let g = ctx.metric();
    let raised = (1..d)
        .map(|i| {
            let mut acc = AlgebraElement::zero(ctx.algebra(), n);
            for j in 1..d {
                let gij = g.g_inv(i, j);
                if !num_traits::Zero::is_zero(gij) {
                    acc = &acc + &momenta[j - 1].scale_rational(gij);
                }
            }
            acc
        })
        .collect();
    let damping = p_tau.shift_h(1).scale(&GaussRational::from_int(-1)).exp()?;
    Ok(MrGenerators { p_tau, momenta, raised, damping })
}

fn i_times(q: &Rational) -> GaussRational {
    GaussRational::real(q.clone()).times_i()
}

/// The coproducts and commutation relations in the Majid-Ruegg basis,
/// exactly modulo `h^{N+1}`.
pub fn verify_mr(ctx: &DeformationContext) -> Result<VerificationReport> {
    require_adapted(ctx)?;
    let start = Instant::now();
    let n = ctx.order();
    let d = ctx.dim();
    let alg = ctx.algebra();
    let g = ctx.metric();
    let tau_sq = ctx.tau().square().clone();
    let mr = mr_generators(ctx)?;
    let hi = ctx.at_order(n + 1)?;
    let one = AlgebraElement::one(alg, n);
    let rot = |a: usize, b: usize| AlgebraElement::rotation(alg, a, b, n);
    let mut report = VerificationReport::new("mr");

    report.push(CheckResult::algebra_zero(
        "mr-exponential",
        None,
        &(&mr.p_tau.shift_h(1).exp()? - ctx.pi_tau()),
    ));
    let mut classical = vec![CheckResult::algebra_zero(
        "mr-classical-limit",
        Some("P̃_τ".into()),
        &(&mr.p_tau.h_coefficient(0) - ctx.p_tau()),
    )];
    for i in 1..d {
        classical.push(CheckResult::algebra_zero(
            "mr-classical-limit",
            Some(format!("P̃_{i}")),
            &(&mr.momentum(i).h_coefficient(0) - &AlgebraElement::momentum(alg, i, n)),
        ));
    }
    report.push(CheckResult::all("mr-classical-limit", classical));

    // Δ(P̃_τ) from Δ(ln Π_τ) one order higher.
    let ln_pi = hi.pi_tau().ln()?;
    let delta_pt = hi.coproduct_extend(&ln_pi).div_h(1)?;
    let primitive = |x: &AlgebraElement| &TensorElement::pair(x, &one) + &TensorElement::pair(&one, x);
    report.push(CheckResult::tensor_zero(
        "mr-ptau-primitive",
        Some("P̃_τ".into()),
        &(&delta_pt - &primitive(&mr.p_tau)),
    ));

    let mut rot_prim = Vec::new();
    for i in 1..d {
        for j in i + 1..d {
            let m = rot(i, j);
            rot_prim.push(CheckResult::tensor_zero(
                "mr-rotation-primitive",
                Some(format!("M_{i}{j}")),
                &(&ctx.coproduct_extend(&m) - &primitive(&m)),
            ));
        }
    }
    report.push(CheckResult::all("mr-rotation-primitive", rot_prim));

    let mut mom = Vec::new();
    for i in 1..d {
        let p = mr.momentum(i);
        let want = &TensorElement::pair(&mr.damping, p) + &TensorElement::pair(p, &one);
        mom.push(CheckResult::tensor_zero(
            "mr-momentum",
            Some(format!("P̃_{i}")),
            &(&ctx.coproduct_extend(p) - &want),
        ));
    }
    report.push(CheckResult::all("mr-momentum", mom));

    let mut boost = Vec::new();
    for j in 1..d {
        let m = rot(0, j);
        let mut want = &TensorElement::pair(&m, &one) + &TensorElement::pair(&mr.damping, &m);
        for k in 1..d {
            let t = TensorElement::pair(mr.raised(k), &rot(k, j)).shift_h(1);
            want = &want - &t.scale(&GaussRational::real(tau_sq.clone()));
        }
        boost.push(CheckResult::tensor_zero(
            "mr-boost",
            Some(format!("M_0{j}")),
            &(&ctx.coproduct_extend(&m) - &want),
        ));
    }
    report.push(CheckResult::all("mr-boost", boost));

    let mut boost_pt = Vec::new();
    let mut rot_pt = Vec::new();
    let mut rot_p = Vec::new();
    let mut boost_p = Vec::new();
    let minus_i_tau_sq = -i_times(&tau_sq);
    // Pieces of the deformed boost-momentum bracket, one order higher.
    let d_hi = hi.pi_tau().ln()?.scale(&GaussRational::from_int(-2)).exp()?;
    let p_hi: Vec<AlgebraElement> =
        (1..d).map(|i| &AlgebraElement::momentum(hi.algebra(), i, n + 1) * hi.pi_tau_inv()).collect();
    let mut square_hi = AlgebraElement::zero(hi.algebra(), n + 1);
    for k in 1..d {
        for l in 1..d {
            let gkl = g.g_inv(k, l);
            if !num_traits::Zero::is_zero(gkl) {
                square_hi = &square_hi + &(&p_hi[k - 1] * &p_hi[l - 1]).scale_rational(gkl);
            }
        }
    }
    let one_hi = AlgebraElement::one(hi.algebra(), n + 1);
    let inner = &(&one_hi - &d_hi) - &square_hi.shift_h(2).scale_rational(&tau_sq);
    // (1/2) κ (1 − e^{−2P̃_τ/κ} − (τ²/κ²) P̃_k P̃^k), with the κ absorbed exactly.
    let half_kappa = inner.div_h(1)?.scale_rational(&crate::scalar::rat(1, 2));

    for i in 1..d {
        let mti = rot(0, i);
        boost_pt.push(CheckResult::algebra_zero(
            "mr-boost-ptau",
            Some(format!("[M_0{i}, P̃_τ]")),
            &(&mti.commutator(&mr.p_tau) - &mr.momentum(i).scale(&minus_i_tau_sq)),
        ));
        for j in 1..d {
            let lhs = mti.commutator(mr.momentum(j));
            let mut rhs = (mr.momentum(j) * mr.momentum(i)).shift_h(1).scale(&i_times(&tau_sq));
            let gij = g.g(i, j);
            if !num_traits::Zero::is_zero(gij) {
                rhs = &rhs + &half_kappa.scale(&i_times(gij));
            }
            boost_p.push(CheckResult::algebra_zero("mr-boost-momentum", Some(format!("[M_0{i}, P̃_{j}]")), &(&lhs - &rhs)));
        }
        for j in i + 1..d {
            let mij = rot(i, j);
            rot_pt.push(CheckResult::algebra_zero(
                "mr-rotation-ptau",
                Some(format!("[M_{i}{j}, P̃_τ]")),
                &mij.commutator(&mr.p_tau),
            ));
            for k in 1..d {
                let rhs = &mr.momentum(i).scale(&i_times(g.g(j, k))) - &mr.momentum(j).scale(&i_times(g.g(i, k)));
                rot_p.push(CheckResult::algebra_zero(
                    "mr-rotation-momentum",
                    Some(format!("[M_{i}{j}, P̃_{k}]")),
                    &(&mij.commutator(mr.momentum(k)) - &rhs),
                ));
            }
        }
    }
    report.push(CheckResult::all("mr-boost-ptau", boost_pt));
    report.push(CheckResult::all("mr-rotation-momentum", rot_p));
    report.push(CheckResult::all("mr-rotation-ptau", rot_pt));
    report.push(CheckResult::all("mr-boost-momentum", boost_p));
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::Metric;

    #[test]
    fn classical_parts() {
        let ctx = DeformationContext::from_ints(Metric::minkowski(3), &[1, 0, 0], 3).unwrap();
        let mr = mr_generators(&ctx).unwrap();
        assert_eq!(mr.p_tau.h_coefficient(0), ctx.p_tau().h_coefficient(0));
        assert_eq!(mr.damping, ctx.pi_tau_inv().clone());
    }

    #[test]
    fn non_adapted_rejected() {
        let ctx = DeformationContext::from_ints(Metric::minkowski(3), &[2, 1, 0], 2).unwrap();
        assert!(matches!(mr_generators(&ctx), Err(Error::Invalid(_))));
        let null = DeformationContext::from_ints(Metric::minkowski(3), &[1, 1, 0], 2).unwrap();
        assert!(matches!(mr_generators(&null), Err(Error::NullTau(_))));
    }

    #[test]
    fn suite_time_and_space_like() {
        for t in [[1, 0, 0], [0, 0, 1]] {
            let g = Metric::minkowski(3);
            let tau = crate::algebra::VectorTau::from_ints(&g, &t).unwrap();
            let b = crate::basis::orthogonal_decompose(&g, &tau).unwrap();
            let ctx = b.adapted_context(&tau, 3).unwrap();
            let r = verify_mr(&ctx).unwrap();
            assert!(r.passed(), "{t:?}\n{r}");
        }
    }
}
