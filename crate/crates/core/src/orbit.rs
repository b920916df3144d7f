//! Orbit type of the deformation vector: sign of `τ²`, which Yang–Baxter
//! equation the r-matrix satisfies, and the stability subgroup of `τ`.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraElement, VectorTau};
use crate::error::{Error, Result};
use crate::metric::Metric;
use crate::scalar::{GaussRational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum YangBaxterType {
    /// Modified equation: `[[r, r]] = −τ² Ω ≠ 0`.
    #[serde(rename = "MYBE")]
    Modified,
    /// Classical equation: `[[r, r]] = 0`.
    #[serde(rename = "CYBE")]
    Classical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupKind {
    #[serde(rename = "SO")]
    Orthogonal,
    #[serde(rename = "ISO")]
    InhomogeneousOrthogonal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityGroup {
    pub kind: GroupKind,
    pub p: usize,
    pub q: usize,
}

impl fmt::Display for StabilityGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            GroupKind::Orthogonal => "SO",
            GroupKind::InhomogeneousOrthogonal => "ISO",
        };
        if self.q == 0 || self.p == 0 {
            write!(f, "{name}({})", self.p + self.q)
        } else {
            write!(f, "{name}({},{})", self.p, self.q)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitClassification {
    pub tau_sq_sign: i8,
    pub yb_type: YangBaxterType,
    pub stability: StabilityGroup,
}

impl OrbitClassification {
    /// The adapted basis suggested for this orbit.
    pub fn suggested_basis(&self) -> &'static str {
        if self.tau_sq_sign == 0 {
            "lightcone"
        } else {
            "orthogonal"
        }
    }
}

impl fmt::Display for OrbitClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.tau_sq_sign {
            s if s < 0 => "negative",
            0 => "zero",
            _ => "positive",
        };
        let yb = match self.yb_type {
            YangBaxterType::Modified => "MYBE",
            YangBaxterType::Classical => "CYBE",
        };
        write!(f, "τ² {sign}, {yb}, stability {}", self.stability)
    }
}

/// Classify `τ` with respect to `g` with signature `(p, q)`:
/// `τ² < 0` gives `SO(p, q−1)`, `τ² > 0` gives `SO(p−1, q)` and a null `τ`
/// gives `ISO(p−1, q−1)`.
pub fn classify_orbit(g: &Metric, tau: &VectorTau) -> Result<OrbitClassification> {
    if tau.is_zero() {
        return Err(Error::ZeroTau);
    }
    let (p, q) = g.signature();
    let sign = tau.square_sign();
    let (kind, sp, sq) = match sign {
        s if s < 0 => (GroupKind::Orthogonal, p, q - 1),
        s if s > 0 => (GroupKind::Orthogonal, p - 1, q),
        _ => {
            if g.is_definite() {
                return Err(Error::Invalid("a null vector cannot exist for a definite metric".into()));
            }
            (GroupKind::InhomogeneousOrthogonal, p - 1, q - 1)
        }
    };
    Ok(OrbitClassification {
        tau_sq_sign: sign,
        yb_type: if sign == 0 { YangBaxterType::Classical } else { YangBaxterType::Modified },
        stability: StabilityGroup { kind, p: sp, q: sq },
    })
}

/// A basis of the `g`-orthogonal complement `τ^⊥`.
pub fn orthogonal_complement(tau: &VectorTau) -> Vec<Vec<Rational>> {
    let d = tau.components().len();
    let pivot = match (0..d).find(|&k| !tau.down(k).is_zero()) {
        Some(k) => k,
        None => {
            return (0..d)
                .map(|j| (0..d).map(|i| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }).collect())
                .collect()
        }
    };
    (0..d)
        .filter(|&j| j != pivot)
        .map(|j| {
            let mut v = vec![Rational::zero(); d];
            v[j] = Rational::from_integer(1.into());
            v[pivot] = -(tau.down(j) / tau.down(pivot));
            v
        })
        .collect()
}

/// `M(u, v) = u^μ v^ν M_{μν}`.
pub fn rotation_along(alg: &Arc<Algebra>, u: &[Rational], v: &[Rational], order: usize) -> AlgebraElement {
    let d = alg.dim();
    let mut out = AlgebraElement::zero(alg, order);
    for mu in 0..d {
        for nu in 0..d {
            let c = &u[mu] * &v[nu];
            if !c.is_zero() {
                out = &out + &AlgebraElement::rotation(alg, mu, nu, order).scale(&GaussRational::real(c));
            }
        }
    }
    out
}

/// Generators `M(u_a, u_b)`, `a < b`, spanning the stability subalgebra of `τ`.
pub fn stability_generators(alg: &Arc<Algebra>, tau: &VectorTau, order: usize) -> Vec<AlgebraElement> {
    let perp = orthogonal_complement(tau);
    let mut out = Vec::new();
    for a in 0..perp.len() {
        for b in a + 1..perp.len() {
            let m = rotation_along(alg, &perp[a], &perp[b], order);
            if !m.is_zero() {
                out.push(m);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classify(g: &Metric, t: &[i64]) -> OrbitClassification {
        classify_orbit(g, &VectorTau::from_ints(g, t).unwrap()).unwrap()
    }

    #[test]
    fn lorentzian_cases() {
        let g = Metric::minkowski(4);
        let t = classify(&g, &[1, 0, 0, 0]);
        assert_eq!((t.yb_type, t.stability.to_string()), (YangBaxterType::Modified, "SO(3)".into()));
        let l = classify(&g, &[1, 0, 0, 1]);
        assert_eq!((l.yb_type, l.stability.to_string()), (YangBaxterType::Classical, "ISO(2)".into()));
        let s = classify(&g, &[0, 0, 0, 1]);
        assert_eq!((s.yb_type, s.stability.to_string()), (YangBaxterType::Modified, "SO(2,1)".into()));
    }

    #[test]
    fn kleinian_null() {
        let g = Metric::diagonal(&[1, -1, 1, -1]).unwrap();
        let k = classify(&g, &[1, 1, 1, 1]);
        assert_eq!(k.stability, StabilityGroup { kind: GroupKind::InhomogeneousOrthogonal, p: 1, q: 1 });
    }

    #[test]
    fn zero_tau_rejected() {
        let g = Metric::minkowski(3);
        let tau = VectorTau::from_ints(&g, &[0, 0, 0]).unwrap();
        assert_eq!(classify_orbit(&g, &tau), Err(Error::ZeroTau));
    }

    #[test]
    fn stability_generators_commute_with_tau() {
        // Each stability generator M(u, v) satisfies [M(u,v), P_τ] = 0.
        let g = Metric::minkowski(4);
        let a = Algebra::new(g.clone());
        for t in [[1, 0, 0, 0], [1, 0, 0, 1], [2, 1, 0, 3]] {
            let tau = VectorTau::from_ints(&g, &t).unwrap();
            let (p_tau, _) = crate::algebra::contract_tau(&a, &tau, 1);
            let gens = stability_generators(&a, &tau, 1);
            assert_eq!(gens.len(), 3);
            for m in gens {
                assert!(m.commutator(&p_tau).is_zero());
            }
        }
    }

    #[test]
    fn json_labels() {
        let g = Metric::minkowski(4);
        let j = serde_json::to_value(classify(&g, &[0, 0, 0, 1])).unwrap();
        assert_eq!(j["yb_type"], "MYBE");
        assert_eq!(j["stability"]["kind"], "SO");
        assert_eq!((j["stability"]["p"].as_u64(), j["stability"]["q"].as_u64()), (Some(2), Some(1)));
    }
}
