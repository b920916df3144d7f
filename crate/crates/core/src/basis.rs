//! Changes of basis adapted to `τ`: the orthogonal `1 + (D−1)` splitting for
//! `τ² ≠ 0` and the light-cone `2 + (D−2)` splitting for null `τ`.
//!
//! A change is stored as a matrix `B` whose columns are the new basis vectors
//! `e'_A = B^μ_A e_μ`. Generators transform as `P'_A = B^μ_A P_μ` and
//! `M'_{AB} = B^μ_A B^ν_B M_{μν}`; the new metric is `Bᵀ g B`.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraElement, VectorTau};
use crate::error::{Error, Result};
use crate::hopf::DeformationContext;
use crate::lie::Generator;
use crate::metric::{identity, independent_subset, invert, Metric, RatMatrix};
use crate::pbw::Monomial;
use crate::report::CheckResult;
use crate::scalar::{int, GaussRational, Rational};
use crate::tensor::TensorElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Identity,
    Orthogonal,
    #[serde(rename = "lightcone")]
    LightCone,
}

#[derive(Clone, PartialEq, Eq)]
pub struct BasisChange {
    kind: BasisKind,
    matrix: RatMatrix,
    inverse: RatMatrix,
    source: Metric,
    target: Metric,
}

impl fmt::Debug for BasisChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BasisChange")
            .field("kind", &self.kind)
            .field("columns", &self.columns())
            .field("target", &self.target)
            .finish()
    }
}

impl BasisChange {
    pub fn new(kind: BasisKind, source: &Metric, matrix: RatMatrix) -> Result<BasisChange> {
        let d = source.dim();
        if matrix.len() != d || matrix.iter().any(|r| r.len() != d) {
            return Err(Error::Invalid(format!("change of basis must be {d}×{d}")));
        }
        let inverse = invert(&matrix).map_err(|_| Error::NotInvertible("change of basis is singular".into()))?;
        let target = source.congruence(&matrix)?;
        Ok(BasisChange { kind, matrix, inverse, source: source.clone(), target })
    }

    /// Build from new basis vectors given in old components.
    pub fn from_columns(kind: BasisKind, source: &Metric, columns: &[Vec<Rational>]) -> Result<BasisChange> {
        let d = source.dim();
        let matrix = (0..d).map(|mu| columns.iter().map(|c| c[mu].clone()).collect()).collect();
        BasisChange::new(kind, source, matrix)
    }

    pub fn identity(g: &Metric) -> BasisChange {
        BasisChange::new(BasisKind::Identity, g, identity(g.dim())).expect("identity is invertible")
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &RatMatrix {
        &self.inverse
    }

    /// The new basis vectors in old components.
    pub fn columns(&self) -> Vec<Vec<Rational>> {
        let d = self.matrix.len();
        (0..d).map(|a| (0..d).map(|mu| self.matrix[mu][a].clone()).collect()).collect()
    }

    pub fn source_metric(&self) -> &Metric {
        &self.source
    }

    pub fn target_metric(&self) -> &Metric {
        &self.target
    }

    /// Components of a vector in the new basis, `B⁻¹ v`.
    pub fn vector_to_new(&self, v: &[Rational]) -> Vec<Rational> {
        crate::metric::mat_vec(&self.inverse, v)
    }

    pub fn tau_in_new(&self, tau: &VectorTau) -> Result<VectorTau> {
        VectorTau::new(&self.target, self.vector_to_new(tau.components()))
    }

    /// The deformation context of `(Bᵀ g B, B⁻¹ τ)`.
    pub fn adapted_context(&self, tau: &VectorTau, order: usize) -> Result<DeformationContext> {
        DeformationContext::with_algebra(&Algebra::new(self.target.clone()), self.tau_in_new(tau)?, order)
    }

    /// Image of an old generator in the new algebra:
    /// `P_μ = (B⁻¹)^A_μ P'_A`, `M_{μν} = (B⁻¹)^A_μ (B⁻¹)^B_ν M'_{AB}`.
    pub fn generator_image(&self, target: &Arc<Algebra>, g: Generator, order: usize) -> AlgebraElement {
        let d = self.matrix.len();
        let inv = &self.inverse;
        let mut out = AlgebraElement::zero(target, order);
        match g {
            Generator::Momentum(mu) => {
                for a in 0..d {
                    if !inv[a][mu].is_zero() {
                        let p = AlgebraElement::momentum(target, a, order);
                        out = &out + &p.scale(&GaussRational::real(inv[a][mu].clone()));
                    }
                }
            }
            Generator::Rotation(mu, nu) => {
                for a in 0..d {
                    for b in 0..d {
                        let c = &inv[a][mu] * &inv[b][nu];
                        if !c.is_zero() && a != b {
                            let m = AlgebraElement::rotation(target, a, b, order);
                            out = &out + &m.scale(&GaussRational::real(c));
                        }
                    }
                }
            }
        }
        out
    }

    fn check_target(&self, target: &Arc<Algebra>) -> Result<()> {
        if target.metric() != &self.target {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    fn monomial_image(&self, target: &Arc<Algebra>, source: &Arc<Algebra>, m: &Monomial, order: usize) -> AlgebraElement {
        let mut acc = AlgebraElement::one(target, order);
        for &x in m.iter() {
            acc = &acc * &self.generator_image(target, source.generator(x), order);
        }
        acc
    }

    /// Transport an element of the old algebra into the new one.
    pub fn pushforward(&self, target: &Arc<Algebra>, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_target(target)?;
        if x.algebra().metric() != &self.source {
            return Err(Error::ContextMismatch);
        }
        let src = x.algebra().clone();
        let n = x.order();
        let mut out = AlgebraElement::zero(target, n);
        for (m, c) in x.terms() {
            out = &out + &self.monomial_image(target, &src, m, n).scale_series(c);
        }
        Ok(out)
    }

    /// Transport a tensor leg by leg.
    pub fn pushforward_tensor(&self, target: &Arc<Algebra>, t: &TensorElement) -> Result<TensorElement> {
        self.check_target(target)?;
        let src = t.algebra().clone();
        let n = t.order();
        let mut out = TensorElement::zero(target, t.legs(), n);
        for (key, c) in t.terms() {
            let legs: Vec<AlgebraElement> = key.iter().map(|m| self.monomial_image(target, &src, m, n)).collect();
            let refs: Vec<&AlgebraElement> = legs.iter().collect();
            out = &out + &TensorElement::from_legs(&refs)?.scale_series(c);
        }
        Ok(out)
    }

    /// `φ([x, y]) = [φ(x), φ(y)]` on every pair of old generators.
    pub fn check_brackets(&self) -> CheckResult {
        let source = Algebra::new(self.source.clone());
        let target = Algebra::new(self.target.clone());
        let gens = source.basis().generators().to_vec();
        let mut results = Vec::new();
        for (i, &x) in gens.iter().enumerate() {
            for &y in &gens[i + 1..] {
                let br = crate::algebra::bracket_element(&source, x, y, 0).expect("basis generators");
                let lhs = self.pushforward(&target, &br).expect("same metric");
                let (px, py) = (self.generator_image(&target, x, 0), self.generator_image(&target, y, 0));
                results.push(CheckResult::algebra_zero(
                    "pushforward-brackets",
                    Some(format!("[{x}, {y}]")),
                    &(&lhs - &px.commutator(&py)),
                ));
            }
        }
        CheckResult::all("pushforward-brackets", results)
    }

    /// `(φ⊗φ)Δ_τ(x) = Δ_{τ'}(φ(x))` for every old generator.
    pub fn check_coproduct_covariance(&self, old: &DeformationContext, new: &DeformationContext) -> CheckResult {
        let n = old.order();
        let mut results = Vec::new();
        for &g in old.algebra().basis().generators() {
            let lhs = self.pushforward_tensor(new.algebra(), &old.coproduct(g).expect("basis")).expect("target");
            let rhs = new.coproduct_extend(&self.generator_image(new.algebra(), g, n));
            results.push(CheckResult::tensor_zero("coproduct-covariance", Some(g.to_string()), &(&lhs - &rhs)));
        }
        CheckResult::all("coproduct-covariance", results)
    }
}

fn unit_vector(d: usize, j: usize) -> Vec<Rational> {
    (0..d).map(|i| if i == j { Rational::one() } else { Rational::zero() }).collect()
}

fn axpy(a: &Rational, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    y.iter().zip(x).map(|(yi, xi)| yi + a * xi).collect()
}

/// `e_0 = τ` followed by the `g`-projections of standard vectors onto `τ^⊥`,
/// taken at minimal indices. Lengths are not normalized.
pub fn orthogonal_decompose(g: &Metric, tau: &VectorTau) -> Result<BasisChange> {
    if tau.is_zero() {
        return Err(Error::ZeroTau);
    }
    let tau_sq = tau.square();
    if tau_sq.is_zero() {
        return Err(Error::NullTau("τ is null; use the light-cone decomposition".into()));
    }
    let d = g.dim();
    let t = tau.components().to_vec();
    let mut candidates = vec![t.clone()];
    for j in 0..d {
        let e = unit_vector(d, j);
        let f = -(g.inner(&e, &t) / tau_sq);
        candidates.push(axpy(&f, &t, &e));
    }
    let chosen = independent_subset(&candidates);
    let columns: Vec<Vec<Rational>> = chosen.iter().take(d).map(|&i| candidates[i].clone()).collect();
    BasisChange::from_columns(BasisKind::Orthogonal, g, &columns)
}

/// `τ̃` with `g(τ, τ̃) = 1`, `g(τ̃, τ̃) = 0`, built from the standard vector at
/// the first index where `τ_k ≠ 0`.
fn null_partner(g: &Metric, n: &[Rational]) -> Option<Vec<Rational>> {
    let lowered = g.lower(n);
    let k = lowered.iter().position(|x| !x.is_zero())?;
    let w: Vec<Rational> = unit_vector(n.len(), k).iter().map(|x| x / &lowered[k]).collect();
    let half = g.inner(&w, &w) / int(2);
    Some(axpy(&-half, n, &w))
}

/// Project `v` onto the complement of the hyperbolic pair `(n, ñ)`.
fn project_off_pair(g: &Metric, v: &[Rational], n: &[Rational], nt: &[Rational]) -> Vec<Rational> {
    let a = g.inner(v, nt);
    let b = g.inner(v, n);
    axpy(&-b, nt, &axpy(&-a, n, v))
}

/// The light-cone basis `(τ, e_a, τ̃)` with `g(τ, τ̃) = 1` and the other
/// Gram conditions on the `2 + (D−2)` splitting. Null directions that show
/// up among the `e_a` are paired the same way, nested inside.
pub fn lightcone_decompose(g: &Metric, tau: &VectorTau) -> Result<BasisChange> {
    if tau.is_zero() {
        return Err(Error::ZeroTau);
    }
    if !tau.square().is_zero() {
        return Err(Error::NonNullTau("τ² ≠ 0; use the orthogonal decomposition".into()));
    }
    if g.is_definite() {
        return Err(Error::InvalidMetric("a definite metric has no null vectors".into()));
    }
    let d = g.dim();
    let t = tau.components().to_vec();
    let tt = null_partner(g, &t).ok_or(Error::ZeroTau)?;
    let mut candidates = vec![t.clone(), tt.clone()];
    for j in 0..d {
        candidates.push(project_off_pair(g, &unit_vector(d, j), &t, &tt));
    }
    let chosen = independent_subset(&candidates);
    let mut rest: Vec<Vec<Rational>> = chosen.iter().skip(2).take(d - 2).map(|&i| candidates[i].clone()).collect();

    let mut heads = Vec::new();
    let mut tails = Vec::new();
    loop {
        let pair = (0..rest.len()).find_map(|i| {
            if !g.inner(&rest[i], &rest[i]).is_zero() {
                return None;
            }
            (0..rest.len()).find(|&j| j != i && !g.inner(&rest[i], &rest[j]).is_zero()).map(|j| (i, j))
        });
        let Some((i, j)) = pair else { break };
        let n = rest[i].clone();
        let c = g.inner(&n, &rest[j]);
        let w: Vec<Rational> = rest[j].iter().map(|x| x / &c).collect();
        let half = g.inner(&w, &w) / int(2);
        let nt = axpy(&-half, &n, &w);
        let others: Vec<Vec<Rational>> = rest
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, v)| project_off_pair(g, v, &n, &nt))
            .collect();
        heads.push(n);
        tails.push(nt);
        rest = others;
    }
    let mut columns = vec![t];
    columns.extend(heads);
    columns.extend(rest);
    columns.extend(tails.into_iter().rev());
    columns.push(tt);
    BasisChange::from_columns(BasisKind::LightCone, g, &columns)
}

/// The decomposition suited to `τ`: orthogonal when `τ² ≠ 0`, light-cone
/// otherwise.
pub fn adapted_basis(g: &Metric, tau: &VectorTau) -> Result<BasisChange> {
    if tau.square().is_zero() {
        lightcone_decompose(g, tau)
    } else {
        orthogonal_decompose(g, tau)
    }
}

/// Whether `(g, τ)` already has `τ = e_0` with `g_{0i} = 0`.
pub fn is_orthogonal_adapted(g: &Metric, tau: &VectorTau) -> bool {
    let d = g.dim();
    tau.components()[0].is_one()
        && tau.components()[1..].iter().all(|x| x.is_zero())
        && (1..d).all(|i| g.g(0, i).is_zero())
}

/// Whether `(g, τ)` has `τ = e_0` null, `g_{0,D−1} = 1` and the light-cone
/// Gram conditions.
pub fn is_lightcone_adapted(g: &Metric, tau: &VectorTau) -> bool {
    let d = g.dim();
    let last = d - 1;
    tau.components()[0].is_one()
        && tau.components()[1..].iter().all(|x| x.is_zero())
        && g.g(0, 0).is_zero()
        && g.g(last, last).is_zero()
        && g.g(0, last).is_one()
        && (1..last).all(|a| g.g(0, a).is_zero() && g.g(last, a).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn tau(g: &Metric, t: &[i64]) -> VectorTau {
        VectorTau::from_ints(g, t).unwrap()
    }

    #[test]
    fn time_like_is_identity() {
        let g = Metric::minkowski(4);
        let b = orthogonal_decompose(&g, &tau(&g, &[1, 0, 0, 0])).unwrap();
        assert_eq!(b.matrix(), &identity(4));
    }

    #[test]
    fn one_gram_schmidt_step() {
        let g = Metric::minkowski(4);
        let b = orthogonal_decompose(&g, &tau(&g, &[2, 1, 0, 0])).unwrap();
        let cols = b.columns();
        assert_eq!(cols[0], vec![int(2), int(1), int(0), int(0)]);
        // e_1 is proportional to (1, 2, 0, 0).
        assert_eq!(&cols[1][1] / &cols[1][0], int(2));
        assert!(cols[1][2].is_zero() && cols[1][3].is_zero());
        let t = b.target_metric();
        assert_eq!(t.g(0, 0), &int(-3));
        assert!((1..4).all(|i| t.g(0, i).is_zero()));
    }

    #[test]
    fn null_tau_rejected_by_orthogonal() {
        let g = Metric::minkowski(4);
        assert!(matches!(orthogonal_decompose(&g, &tau(&g, &[1, 1, 0, 0])), Err(Error::NullTau(_))));
        assert!(matches!(lightcone_decompose(&g, &tau(&g, &[1, 0, 0, 0])), Err(Error::NonNullTau(_))));
    }

    #[test]
    fn lorentzian_light_cone() {
        let g = Metric::minkowski(4);
        let b = lightcone_decompose(&g, &tau(&g, &[1, 0, 0, 1])).unwrap();
        let cols = b.columns();
        assert_eq!(cols[3], vec![rat(-1, 2), int(0), int(0), rat(1, 2)]);
        let t = b.target_metric();
        assert!(is_lightcone_adapted(t, &b.tau_in_new(&tau(&g, &[1, 0, 0, 1])).unwrap()));
        assert_eq!(t.g(1, 1), &int(1));
        assert_eq!(t.g(2, 2), &int(1));
    }

    #[test]
    fn kleinian_product_light_cone() {
        let g = Metric::diagonal(&[1, -1, 1, -1]).unwrap();
        let b = lightcone_decompose(&g, &tau(&g, &[1, 1, 1, 1])).unwrap();
        let t = b.target_metric();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i + j == 3 { int(1) } else { int(0) };
                assert_eq!(t.g(i, j), &want, "({i},{j})");
            }
        }
    }

    #[test]
    fn brackets_transform_covariantly() {
        let g = Metric::minkowski(3);
        for t in [[2, 1, 0], [1, 1, 0], [0, 1, 1]] {
            let v = tau(&g, &t);
            let b = adapted_basis(&g, &v).unwrap();
            let r = b.check_brackets();
            assert!(r.passed, "{t:?}: {r:?}");
        }
    }

    #[test]
    fn coproducts_transform_covariantly() {
        let g = Metric::minkowski(3);
        let v = tau(&g, &[2, 1, 0]);
        let b = orthogonal_decompose(&g, &v).unwrap();
        let old = DeformationContext::with_algebra(&Algebra::new(g.clone()), v.clone(), 2).unwrap();
        let new = b.adapted_context(&v, 2).unwrap();
        let r = b.check_coproduct_covariance(&old, &new);
        assert!(r.passed, "{r:?}");
    }
}
