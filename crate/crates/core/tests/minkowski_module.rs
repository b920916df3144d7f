//! κ-Minkowski space: associativity of the normal-ordered product, the unit
//! and counit properties of the action, and reality of the relations.

mod common;

use common::{metric, tau_components};
use kappa_iso::minkowski::{relation_element, FreeWords, star_words, MinkowskiSpace, ModuleAction};
use kappa_iso::scalar::rat;
use kappa_iso::{AlgebraElement, DeformationContext, HSeries, MinkowskiElement, Metric, VectorTau};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn product_is_associative(
        (g, t) in (2usize..=4).prop_flat_map(|d| (metric(d), tau_components(d))),
        a in proptest::collection::vec(0u8..4, 0..3),
        b in proptest::collection::vec(0u8..4, 0..3),
        c in proptest::collection::vec(0u8..4, 0..3),
    ) {
        let d = g.dim() as u8;
        let tau = VectorTau::new(&g, t).unwrap();
        let space = MinkowskiSpace::new(g, tau);
        let w = |v: &[u8]| MinkowskiElement::word(&space, &v.iter().map(|x| x % d).collect::<Vec<_>>(), 3);
        let (x, y, z) = (w(&a), w(&b), w(&c));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        let mut concat: Vec<u8> = a.iter().chain(&b).map(|v| v % d).collect();
        concat.extend(c.iter().map(|v| v % d));
        prop_assert_eq!(&(&x * &y) * &z, w(&concat));
    }
}

#[test]
fn unit_and_counit() {
    let ctx = DeformationContext::from_ints(Metric::minkowski(3), &[1, 0, 1], 2).unwrap();
    let action = ModuleAction::new(&ctx);
    let one = MinkowskiElement::one(action.space(), 2);
    let alg = ctx.algebra();
    let id = AlgebraElement::one(alg, 2);
    for m in action.monomials(2) {
        let a = action.word(&m);
        assert_eq!(action.act(&id, &a), a);
    }
    for l in [ctx.pi_tau().clone(), ctx.casimir().clone(), AlgebraElement::rotation(alg, 0, 2, 2)] {
        let eps = ctx.counit(&l);
        assert_eq!(action.act(&l, &one), MinkowskiElement::scalar(action.space(), eps));
    }
    assert_eq!(action.act(ctx.pi_tau(), &one), MinkowskiElement::scalar(action.space(), HSeries::one(2)));
}

#[test]
fn relations_are_real() {
    let g = Metric::minkowski(4);
    let tau = VectorTau::new(&g, vec![rat(1, 2), rat(0, 1), rat(-3, 1), rat(1, 1)]).unwrap();
    for mu in 0..4 {
        for nu in 0..4 {
            // The relation element is anti-Hermitian, so conjugation maps the
            // relation to itself.
            let r = relation_element(&tau, mu, nu, 2);
            let neg: FreeWords = r.iter().map(|(w, c)| (w.clone(), -c)).collect();
            assert_eq!(star_words(&r), neg, "({mu}, {nu})");
        }
    }
}
