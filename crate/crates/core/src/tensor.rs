//! Multi-legged tensors `U ⊗ … ⊗ U` with truncated-series coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::algebra::{monomial_string, Algebra, AlgebraElement};
use crate::error::{Error, Result};
use crate::pbw::{Monomial, Term};
use crate::scalar::GaussRational;
use crate::series::HSeries;

pub type TensorKey = SmallVec<[Monomial; 3]>;

/// Where a 2-leg tensor goes inside a 3-leg one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Placement {
    L12,
    L13,
    L23,
}

impl Placement {
    fn positions(self) -> [usize; 2] {
        match self {
            Placement::L12 => [0, 1],
            Placement::L13 => [0, 2],
            Placement::L23 => [1, 2],
        }
    }
}

#[derive(Clone)]
pub struct TensorElement {
    alg: Arc<Algebra>,
    order: usize,
    legs: usize,
    terms: BTreeMap<TensorKey, HSeries>,
}

impl TensorElement {
    pub fn zero(alg: &Arc<Algebra>, legs: usize, order: usize) -> Self {
        TensorElement { alg: alg.clone(), order, legs, terms: BTreeMap::new() }
    }

    pub fn one(alg: &Arc<Algebra>, legs: usize, order: usize) -> Self {
        let mut t = Self::zero(alg, legs, order);
        t.add_term((0..legs).map(|_| Monomial::new()).collect(), &HSeries::one(order));
        t
    }

    /// `a₁ ⊗ a₂ ⊗ …`.
    pub fn from_legs(factors: &[&AlgebraElement]) -> Result<Self> {
        let first = factors.first().ok_or_else(|| Error::Invalid("empty tensor product".into()))?;
        let (alg, order) = (first.algebra().clone(), first.order());
        let mut acc = Self::zero(&alg, 0, order);
        acc.add_term(TensorKey::new(), &HSeries::one(order));
        for f in factors {
            if !f.algebra().same_as(&alg) {
                return Err(Error::ContextMismatch);
            }
            if f.order() != order {
                return Err(Error::OrderMismatch(order, f.order()));
            }
            let mut next = Self::zero(&alg, acc.legs + 1, order);
            for (k, c) in &acc.terms {
                for (m, d) in f.terms() {
                    let mut key = k.clone();
                    key.push(m.clone());
                    next.add_term(key, &c.mul_unchecked(d));
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    pub fn pair(a: &AlgebraElement, b: &AlgebraElement) -> Self {
        Self::from_legs(&[a, b]).expect("tensor factor mismatch")
    }

    pub fn from_algebra(a: &AlgebraElement) -> Self {
        Self::from_legs(&[a]).expect("single factor")
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorKey, &HSeries)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &[&[u8]]) -> HSeries {
        let k: TensorKey = key.iter().map(|m| Monomial::from_slice(m)).collect();
        self.terms.get(&k).cloned().unwrap_or_else(|| HSeries::zero(self.order))
    }

    pub fn leading_term(&self) -> Option<(TensorKey, HSeries)> {
        self.terms.iter().next().map(|(k, c)| (k.clone(), c.clone()))
    }

    pub(crate) fn add_term(&mut self, key: TensorKey, c: &HSeries) {
        debug_assert_eq!(key.len(), self.legs);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                v.add_assign_unchecked(c);
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    /// Overwrite one coefficient; used to plant defects in negative controls.
    pub fn set_coefficient(&mut self, key: TensorKey, c: HSeries) {
        self.terms.remove(&key);
        self.add_term(key, &c);
    }

    /// Collapse a one-legged tensor back to an algebra element.
    pub fn to_algebra(&self) -> Result<AlgebraElement> {
        if self.legs != 1 {
            return Err(Error::LegMismatch(self.legs, 1));
        }
        let mut out = AlgebraElement::zero(&self.alg, self.order);
        for (k, c) in &self.terms {
            out.add_term(k[0].clone(), c);
        }
        Ok(out)
    }

    fn check(&self, other: &TensorElement) -> Result<()> {
        if !self.alg.same_as(&other.alg) {
            return Err(Error::ContextMismatch);
        }
        if self.legs != other.legs {
            return Err(Error::LegMismatch(self.legs, other.legs));
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), &-c);
        }
        Ok(out)
    }

    /// Leg-wise product `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn checked_mul(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check(other)?;
        let n = self.order;
        let pbw = self.alg.pbw();
        let mut out = TensorElement::zero(&self.alg, self.legs, n);
        for (ka, ca) in &self.terms {
            let va = ca.valuation().unwrap_or(n + 1);
            for (kb, cb) in &other.terms {
                if va + cb.valuation().unwrap_or(n + 1) > n {
                    continue;
                }
                let prod = ca.mul_unchecked(cb);
                if prod.is_zero() {
                    continue;
                }
                let per_leg: Vec<Arc<Vec<Term>>> =
                    ka.iter().zip(kb.iter()).map(|(a, b)| pbw.mul_mono(a, b)).collect();
                out.add_cartesian(&per_leg, &prod);
            }
        }
        Ok(out)
    }

    // Add `coeff · Π_legs (Σ terms)`.
    fn add_cartesian(&mut self, per_leg: &[Arc<Vec<Term>>], coeff: &HSeries) {
        let n = self.order;
        let mut partial: Vec<(TensorKey, usize, GaussRational)> = vec![(TensorKey::new(), 0, GaussRational::one())];
        for leg in per_leg {
            let mut next = Vec::with_capacity(partial.len() * leg.len());
            for (key, k, c) in &partial {
                for (m, km, cm) in leg.iter() {
                    let kk = k + *km as usize;
                    if kk > n {
                        continue;
                    }
                    let mut key2 = key.clone();
                    key2.push(m.clone());
                    next.push((key2, kk, c * cm));
                }
            }
            partial = next;
        }
        for (key, k, c) in partial {
            let mut s = HSeries::zero(n);
            s.add_scaled_shifted(coeff, &c, k);
            self.add_term(key, &s);
        }
    }

    pub fn scale(&self, c: &GaussRational) -> TensorElement {
        self.map_coeffs(|s| s.scale(c))
    }

    pub fn scale_series(&self, s: &HSeries) -> TensorElement {
        self.map_coeffs(|c| c.mul_unchecked(s))
    }

    pub fn shift_h(&self, k: usize) -> TensorElement {
        self.map_coeffs(|c| c.shift(k))
    }

    pub fn rescale_h(&self, lambda: &crate::scalar::Rational) -> TensorElement {
        self.map_coeffs(|c| c.rescale_h(lambda))
    }

    /// Coefficient-wise complex conjugation.
    pub fn conj_coeffs(&self) -> TensorElement {
        self.map_coeffs(HSeries::conj)
    }

    /// The `h^k` part with `h`-free coefficients.
    pub fn h_coefficient(&self, k: usize) -> TensorElement {
        self.map_coeffs(|c| HSeries::constant(c.coeff(k).clone(), c.order()))
    }

    pub fn with_order(&self, order: usize) -> TensorElement {
        let mut out = TensorElement::zero(&self.alg, self.legs, order);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &c.with_order(order));
        }
        out
    }

    /// Divide by `h^k`; the result lives at order `N - k`.
    pub fn div_h(&self, k: usize) -> Result<TensorElement> {
        if k > self.order {
            return Err(Error::NotInvertible(format!("cannot divide order-{} tensor by h^{k}", self.order)));
        }
        let mut out = TensorElement::zero(&self.alg, self.legs, self.order - k);
        for (key, c) in &self.terms {
            out.add_term(key.clone(), &c.div_h(k)?);
        }
        Ok(out)
    }

    fn map_coeffs(&self, f: impl Fn(&HSeries) -> HSeries) -> TensorElement {
        let mut out = TensorElement::zero(&self.alg, self.legs, self.order);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &f(c));
        }
        out
    }

    /// Reorder legs: leg `i` of the result is leg `perm[i]` of `self`.
    pub fn permute_legs(&self, perm: &[usize]) -> Result<TensorElement> {
        let mut seen = vec![false; self.legs];
        if perm.len() != self.legs || perm.iter().any(|&p| p >= self.legs || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Invalid(format!("{perm:?} is not a permutation of {} legs", self.legs)));
        }
        let mut out = TensorElement::zero(&self.alg, self.legs, self.order);
        for (k, c) in &self.terms {
            out.add_term(perm.iter().map(|&p| k[p].clone()).collect(), c);
        }
        Ok(out)
    }

    /// Exchange the two legs of a 2-tensor.
    pub fn flip(&self) -> TensorElement {
        self.permute_legs(&[1, 0]).expect("flip needs two legs")
    }

    /// Insert units so that a 2-leg tensor sits at `placement` inside 3 legs.
    pub fn embed(&self, placement: Placement) -> Result<TensorElement> {
        if self.legs != 2 {
            return Err(Error::LegMismatch(self.legs, 2));
        }
        let pos = placement.positions();
        let mut out = TensorElement::zero(&self.alg, 3, self.order);
        for (k, c) in &self.terms {
            let mut key: TensorKey = (0..3).map(|_| Monomial::new()).collect();
            key[pos[0]] = k[0].clone();
            key[pos[1]] = k[1].clone();
            out.add_term(key, c);
        }
        Ok(out)
    }

    /// Replace leg `leg` by the legs of `f(monomial)`, linearly.
    pub fn map_leg(&self, leg: usize, f: &dyn Fn(&Monomial) -> TensorElement) -> TensorElement {
        let mut out: Option<TensorElement> = None;
        for (k, c) in &self.terms {
            let img = f(&k[leg]);
            let acc = out.get_or_insert_with(|| {
                TensorElement::zero(&self.alg, self.legs - 1 + img.legs, self.order)
            });
            for (ik, ic) in &img.terms {
                let mut key: TensorKey = k[..leg].iter().cloned().collect();
                key.extend(ik.iter().cloned());
                key.extend(k[leg + 1..].iter().cloned());
                acc.add_term(key, &c.mul_unchecked(ic));
            }
        }
        out.unwrap_or_else(|| {
            // No terms: the leg count of the image is not observable, probe with 1.
            let img = f(&Monomial::new());
            TensorElement::zero(&self.alg, self.legs - 1 + img.legs, self.order)
        })
    }

    /// Apply a linear map `U → U` on one leg.
    pub fn map_leg_algebra(&self, leg: usize, f: &dyn Fn(&Monomial) -> AlgebraElement) -> TensorElement {
        self.map_leg(leg, &|m| TensorElement::from_algebra(&f(m)))
    }

    /// Apply the counit on one leg, removing it.
    pub fn counit_leg(&self, leg: usize) -> TensorElement {
        let alg = self.alg.clone();
        let order = self.order;
        self.map_leg(leg, &move |m| {
            let mut t = TensorElement::zero(&alg, 0, order);
            if m.is_empty() {
                t.add_term(TensorKey::new(), &HSeries::one(order));
            }
            t
        })
    }

    /// Multiply adjacent legs `leg` and `leg + 1` together.
    pub fn multiply_legs(&self, leg: usize) -> Result<TensorElement> {
        if leg + 1 >= self.legs {
            return Err(Error::LegMismatch(self.legs, leg + 2));
        }
        let pbw = self.alg.pbw();
        let mut out = TensorElement::zero(&self.alg, self.legs - 1, self.order);
        for (k, c) in &self.terms {
            for (m, kh, cm) in pbw.mul_mono(&k[leg], &k[leg + 1]).iter() {
                let mut key: TensorKey = k[..leg].iter().cloned().collect();
                key.push(m.clone());
                key.extend(k[leg + 2..].iter().cloned());
                let mut s = HSeries::zero(self.order);
                s.add_scaled_shifted(c, cm, *kh as usize);
                out.add_term(key, &s);
            }
        }
        Ok(out)
    }

    /// `m(a ⊗ b) = ab` for a 2-tensor.
    pub fn multiply(&self) -> Result<AlgebraElement> {
        if self.legs != 2 {
            return Err(Error::LegMismatch(self.legs, 2));
        }
        self.multiply_legs(0)?.to_algebra()
    }

    /// Inverse of `1 + X` with `X = O(h)` (more generally, of an element
    /// whose `h⁰` part is a nonzero multiple of the unit).
    pub fn invert(&self) -> Result<TensorElement> {
        let unit_key: TensorKey = (0..self.legs).map(|_| Monomial::new()).collect();
        let mut c0 = GaussRational::zero();
        for (k, c) in &self.terms {
            let x = c.coeff(0);
            if x.is_zero() {
                continue;
            }
            if *k != unit_key {
                return Err(Error::NotInvertible("tensor h⁰ part is not scalar".into()));
            }
            c0 = x.clone();
        }
        let c_inv = c0.inv().map_err(|_| Error::NotInvertible("tensor h⁰ part vanishes".into()))?;
        let one = TensorElement::one(&self.alg, self.legs, self.order);
        let x = &self.scale(&c_inv) - &one;
        let mut acc = one.clone();
        let mut power = one;
        for k in 1..=self.order {
            power = &power * &x;
            if power.is_zero() {
                break;
            }
            let sign = GaussRational::from_int(if k % 2 == 0 { 1 } else { -1 });
            acc = &acc + &power.scale(&sign);
        }
        Ok(acc.scale(&c_inv))
    }

    /// `exp(X)` for `X = O(h)`.
    pub fn exp(&self) -> Result<TensorElement> {
        if self.terms.values().any(|c| !c.coeff(0).is_zero()) {
            return Err(Error::NotInvertible("exponent must be O(h)".into()));
        }
        let mut acc = TensorElement::one(&self.alg, self.legs, self.order);
        let mut power = acc.clone();
        for k in 1..=self.order {
            power = (&power * self).scale(&GaussRational::from_ratio(1, k as i64));
            if power.is_zero() {
                break;
            }
            acc = &acc + &power;
        }
        Ok(acc)
    }

    pub fn key_string(&self, key: &TensorKey) -> String {
        key.iter().map(|m| monomial_string(self.alg.basis(), m)).collect::<Vec<_>>().join("⊗")
    }
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg) && self.legs == other.legs && self.order == other.order && self.terms == other.terms
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("({}) {}", crate::render::series_inline(c), self.key_string(k)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        self.checked_add(rhs).expect("tensor mismatch")
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self.checked_sub(rhs).expect("tensor mismatch")
    }
}

impl Mul for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        self.checked_mul(rhs).expect("tensor mismatch")
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scale(&GaussRational::from_int(-1))
    }
}
