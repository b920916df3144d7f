#![allow(dead_code)]

use std::sync::Arc;

use kappa_iso::scalar::{rat, GaussRational, Rational};
use kappa_iso::{Algebra, AlgebraElement, HSeries, Metric, VectorTau};
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

pub fn gauss() -> impl Strategy<Value = GaussRational> {
    (small_rational(), small_rational()).prop_map(|(re, im)| GaussRational::new(re, im))
}

pub fn hseries(order: usize) -> impl Strategy<Value = HSeries> {
    proptest::collection::vec(gauss(), order + 1).prop_map(move |c| HSeries::from_coeffs(c, order))
}

/// Symmetric rational matrices that are nondegenerate.
pub fn metric(dim: usize) -> impl Strategy<Value = Metric> {
    proptest::collection::vec(small_rational(), dim * (dim + 1) / 2).prop_filter_map("degenerate", move |v| {
        let mut m = vec![vec![Rational::from_integer(0.into()); dim]; dim];
        let mut it = v.into_iter();
        for i in 0..dim {
            for j in i..dim {
                let x = it.next().unwrap();
                m[i][j] = x.clone();
                m[j][i] = x;
            }
        }
        Metric::new(m).ok()
    })
}

pub fn metric_2_to_4() -> impl Strategy<Value = Metric> {
    (2usize..=4).prop_flat_map(metric)
}

pub fn tau_components(dim: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(small_rational(), dim)
        .prop_filter("zero vector", |v| v.iter().any(|x| !num_traits::Zero::is_zero(x)))
}

pub fn metric_and_tau(dims: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (Metric, VectorTau)> {
    dims.prop_flat_map(|d| (metric(d), tau_components(d)))
        .prop_map(|(g, t)| {
            let tau = VectorTau::new(&g, t).unwrap();
            (g, tau)
        })
}

/// A random combination of short generator words.
pub fn element(alg: &Arc<Algebra>, order: usize, words: &[(Vec<usize>, GaussRational)]) -> AlgebraElement {
    let gens = alg.basis().generators();
    let mut out = AlgebraElement::zero(alg, order);
    for (w, c) in words {
        let mut x = AlgebraElement::constant(alg, c.clone(), order);
        for &i in w {
            x = &x * &AlgebraElement::generator(alg, gens[i % gens.len()], order).unwrap();
        }
        out = &out + &x;
    }
    out
}

pub fn words(max_len: usize, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<usize>, GaussRational)>> {
    proptest::collection::vec((proptest::collection::vec(0usize..64, 0..=max_len), gauss()), 1..=max_terms)
}
