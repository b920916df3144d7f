//! The Schouten identity `[[r_τ, r_τ]] = −τ² Ω` on random metrics, exact
//! antisymmetry of wedge storage, and congruence invariance of the orbit
//! classification.

mod common;

use common::{metric, metric_and_tau, small_rational, tau_components};
use kappa_iso::metric::{invert, mat_vec};
use kappa_iso::scalar::{GaussRational, Rational};
use kappa_iso::wedge::verify_schouten;
use kappa_iso::{classify_orbit, omega, r_matrix, schouten_square, Algebra, DeformationContext, VectorTau, WedgeElement};
use proptest::prelude::*;

fn invertible(dim: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    proptest::collection::vec(proptest::collection::vec(small_rational(), dim), dim)
        .prop_filter("singular", |m| invert(m).is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn schouten_identity((g, tau) in metric_and_tau(2..=4)) {
        let alg = Algebra::new(g);
        let r = r_matrix(&alg, &tau).unwrap();
        let lhs = schouten_square(&r).unwrap();
        let rhs = omega(&alg).scale(&GaussRational::real(-tau.square()));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(verify_schouten(&alg, &tau).unwrap().passed());
    }

    #[test]
    fn wedge_storage_is_antisymmetric(g in metric(3), idx in proptest::collection::vec(0u8..6, 3), c in common::gauss()) {
        let alg = Algebra::new(g);
        let mut w = WedgeElement::zero(&alg, 3).unwrap();
        w.add(&idx, &c);
        let perms = [[0, 1, 2, 1], [1, 0, 2, -1], [0, 2, 1, -1], [2, 1, 0, -1], [1, 2, 0, 1], [2, 0, 1, 1]];
        for p in perms {
            let key = [idx[p[0] as usize], idx[p[1] as usize], idx[p[2] as usize]];
            let want = if p[3] > 0 { c.clone() } else { -&c };
            let distinct = idx[0] != idx[1] && idx[1] != idx[2] && idx[0] != idx[2];
            prop_assert_eq!(w.get(&key), if distinct { want } else { GaussRational::zero() });
        }
    }

    #[test]
    fn classification_is_congruence_invariant(
        (g, t, b) in (2usize..=4).prop_flat_map(|d| (metric(d), tau_components(d), invertible(d)))
    ) {
        let tau = VectorTau::new(&g, t).unwrap();
        let g2 = g.congruence(&b).unwrap();
        let tau2 = VectorTau::new(&g2, mat_vec(&invert(&b).unwrap(), tau.components())).unwrap();
        prop_assert_eq!(classify_orbit(&g, &tau).unwrap(), classify_orbit(&g2, &tau2).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    /// Generators of the stability subalgebra have primitive deformed coproducts.
    #[test]
    fn stability_subalgebra_is_primitive((g, tau) in metric_and_tau(2..=3)) {
        let ctx = DeformationContext::new(g, tau.components().to_vec(), 2).unwrap();
        let report = ctx.verify_consistency();
        let check = report.check("stability-primitive").unwrap();
        prop_assert!(check.passed, "{}", report);
    }
}
