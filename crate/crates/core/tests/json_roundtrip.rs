//! Decoding an encoded expression gives it back exactly.

mod common;

use common::{element, gauss, hseries, metric, words};
use kappa_iso::json::*;
use kappa_iso::minkowski::MinkowskiSpace;
use kappa_iso::{classify_orbit, Algebra, DeformationContext, MinkowskiElement, Metric, TensorElement, VectorTau, WedgeElement};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn series(s in hseries(4)) {
        prop_assert_eq!(series_from_json(&series_to_json(&s), 4).unwrap(), s);
    }

    #[test]
    fn algebra_elements(g in metric(3), w in words(3, 4)) {
        let alg = Algebra::new(g);
        let x = element(&alg, 2, &w);
        let text = serde_json::to_string(&algebra_to_json(&x)).unwrap();
        let back = algebra_from_json(&alg, 2, &serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn tensors(g in metric(3), a in words(2, 3), b in words(2, 3), c in words(1, 2)) {
        let alg = Algebra::new(g);
        let (x, y, z) = (element(&alg, 1, &a), element(&alg, 1, &b), element(&alg, 1, &c));
        let t2 = TensorElement::pair(&x, &y);
        prop_assert_eq!(tensor_from_json(&alg, 1, &tensor_to_json(&t2)).unwrap(), t2);
        let t3 = TensorElement::from_legs(&[&x, &y, &z]).unwrap();
        prop_assert_eq!(tensor_from_json(&alg, 1, &tensor_to_json(&t3)).unwrap(), t3);
    }

    #[test]
    fn wedges(g in metric(4), terms in proptest::collection::vec((proptest::collection::vec(0u8..10, 3), gauss()), 1..6)) {
        let alg = Algebra::new(g);
        let mut w = WedgeElement::zero(&alg, 3).unwrap();
        for (k, c) in &terms {
            w.add(k, c);
        }
        prop_assert_eq!(wedge_from_json(&alg, &wedge_to_json(&w)).unwrap(), w);
    }

    #[test]
    fn minkowski_elements(words in proptest::collection::vec((proptest::collection::vec(0u8..4, 0..4), gauss()), 1..5)) {
        let g = Metric::minkowski(4);
        let tau = VectorTau::from_ints(&g, &[1, 0, 0, 1]).unwrap();
        let space = MinkowskiSpace::new(g, tau);
        let mut x = MinkowskiElement::zero(&space, 2);
        for (w, c) in &words {
            x = &x + &MinkowskiElement::word(&space, w, 2).scale(c);
        }
        prop_assert_eq!(minkowski_from_json(&space, 2, &minkowski_to_json(&x)).unwrap(), x);
    }
}

#[test]
fn orbit_classifications() {
    let g = Metric::minkowski(4);
    for t in [[1, 0, 0, 0], [0, 0, 0, 1], [1, 0, 0, 1]] {
        let o = classify_orbit(&g, &VectorTau::from_ints(&g, &t).unwrap()).unwrap();
        assert_eq!(orbit_from_json(&orbit_to_json(&o)).unwrap(), o);
    }
}

#[test]
fn deformation_data() {
    let ctx = DeformationContext::from_ints(Metric::minkowski(3), &[2, 1, 0], 3).unwrap();
    for &g in ctx.algebra().basis().generators() {
        let d = ctx.coproduct(g).unwrap();
        assert_eq!(tensor_from_json(ctx.algebra(), 3, &tensor_to_json(&d)).unwrap(), d);
        let s = ctx.antipode(g).unwrap();
        assert_eq!(algebra_from_json(ctx.algebra(), 3, &algebra_to_json(&s)).unwrap(), s);
    }
    let pi = ctx.pi_tau();
    assert_eq!(&algebra_from_json(ctx.algebra(), 3, &algebra_to_json(pi)).unwrap(), pi);
}

#[test]
fn report_layout() {
    let ctx = DeformationContext::from_ints(Metric::minkowski(2), &[1, 0], 2).unwrap();
    let v = report_to_json(&ctx.verify_hopf());
    assert_eq!(v["suite"], "hopf");
    assert!(v["elapsed_ms"].is_u64());
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true && c.get("residual").is_none()));
}
