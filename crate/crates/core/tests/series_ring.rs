//! Ring axioms of truncated series with Gaussian rational coefficients.

mod common;

use common::hseries;
use kappa_iso::scalar::GaussRational;
use kappa_iso::HSeries;
use proptest::prelude::*;

proptest! {
    #[test]
    fn ring_axioms(a in hseries(4), b in hseries(4), c in hseries(4)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &HSeries::one(4), a);
    }

    #[test]
    fn inverse_is_two_sided(a in hseries(5)) {
        match a.invert() {
            Ok(inv) => {
                prop_assert_eq!(&a * &inv, HSeries::one(5));
                prop_assert_eq!(&inv * &a, HSeries::one(5));
            }
            Err(_) => prop_assert!(a.coeff(0).is_zero()),
        }
    }

    #[test]
    fn truncation_is_a_ring_homomorphism(a in hseries(5), b in hseries(5), m in 0usize..5) {
        prop_assert_eq!((&a * &b).with_order(m), &a.with_order(m) * &b.with_order(m));
        prop_assert_eq!((&a + &b).with_order(m), &a.with_order(m) + &b.with_order(m));
    }

    #[test]
    fn shift_then_divide(a in hseries(4), k in 0usize..4) {
        let shifted = a.shift(k);
        prop_assert_eq!(shifted.div_h(k).unwrap(), a.with_order(4 - k));
    }
}

#[test]
fn mixed_orders_are_rejected() {
    let a = HSeries::constant(GaussRational::one(), 2);
    let b = HSeries::constant(GaussRational::one(), 3);
    assert!(a.checked_mul(&b).is_err());
    assert!(a.checked_add(&b).is_err());
}
