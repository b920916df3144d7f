//! PBW normal ordering for enveloping-type algebras.
//!
//! The algebra is presented by generators `0..n` (ordered by index) and
//! relations `y x = x y + [y, x]` for `y > x`, where `[y, x]` is linear in the
//! generators with coefficients of the form `c · h^k`. Monomials are stored as
//! nondecreasing index sequences. Products are reduced by inserting generators
//! from the right: `m·y·x = (m·x)·y + m·[y,x]`, each step decreasing the
//! (degree, inversion count) measure. Reductions are memoized.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use smallvec::SmallVec;

use crate::scalar::GaussRational;

pub type Monomial = SmallVec<[u8; 8]>;

/// One term of a reduced product: monomial, power of `h`, scalar coefficient.
pub type Term = (Monomial, u8, GaussRational);

/// `[y, x]` as `Σ c · h^k · z`.
pub type Relation = Vec<(u8, u8, GaussRational)>;

pub struct PbwEngine {
    n: usize,
    // relations[y][x] = [y, x], only consulted for y > x.
    relations: Vec<Vec<Relation>>,
    gen_cache: RwLock<HashMap<(Monomial, u8), Arc<Vec<Term>>>>,
    mono_cache: RwLock<HashMap<(Monomial, Monomial), Arc<Vec<Term>>>>,
}

impl std::fmt::Debug for PbwEngine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PbwEngine").field("generators", &self.n).finish()
    }
}

impl PbwEngine {
    /// `bracket(y, x)` must return `[y, x]` for `y > x`.
    pub fn new(n: usize, bracket: impl Fn(u8, u8) -> Relation) -> PbwEngine {
        let mut relations = vec![vec![Vec::new(); n]; n];
        for y in 0..n {
            for x in 0..y {
                relations[y][x] = bracket(y as u8, x as u8);
            }
        }
        PbwEngine {
            n,
            relations,
            gen_cache: RwLock::new(HashMap::new()),
            mono_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn num_generators(&self) -> usize {
        self.n
    }

    /// Normal form of `m · x` for a normal monomial `m`.
    pub fn mul_gen(&self, m: &[u8], x: u8) -> Arc<Vec<Term>> {
        if m.last().is_none_or(|&l| l <= x) {
            let mut mono: Monomial = m.iter().copied().collect();
            mono.push(x);
            return Arc::new(vec![(mono, 0, GaussRational::one())]);
        }
        let key: (Monomial, u8) = (m.iter().copied().collect(), x);
        if let Some(hit) = self.gen_cache.read().unwrap().get(&key) {
            return hit.clone();
        }
        let (rest, y) = (&m[..m.len() - 1], m[m.len() - 1]);
        let mut acc = Accumulator::default();
        // (rest · x) · y
        for (n1, k1, c1) in self.mul_gen(rest, x).iter() {
            for (n2, k2, c2) in self.mul_gen(n1, y).iter() {
                acc.add(n2, k1 + k2, &(c1 * c2));
            }
        }
        // rest · [y, x]
        for (z, kz, cz) in &self.relations[y as usize][x as usize] {
            for (n1, k1, c1) in self.mul_gen(rest, *z).iter() {
                acc.add(n1, kz + k1, &(cz * c1));
            }
        }
        let out = Arc::new(acc.finish());
        self.gen_cache.write().unwrap().insert(key, out.clone());
        out
    }

    /// Normal form of `a · b` for normal monomials `a`, `b`.
    pub fn mul_mono(&self, a: &[u8], b: &[u8]) -> Arc<Vec<Term>> {
        if b.is_empty() || a.is_empty() || a[a.len() - 1] <= b[0] {
            let mono: Monomial = a.iter().chain(b).copied().collect();
            return Arc::new(vec![(mono, 0, GaussRational::one())]);
        }
        let key: (Monomial, Monomial) = (a.iter().copied().collect(), b.iter().copied().collect());
        if let Some(hit) = self.mono_cache.read().unwrap().get(&key) {
            return hit.clone();
        }
        let out = Arc::new(self.reduce_word_onto(a, b));
        self.mono_cache.write().unwrap().insert(key, out.clone());
        out
    }

    /// Normal form of an arbitrary word of generators.
    pub fn normal_order(&self, word: &[u8]) -> Vec<Term> {
        self.reduce_word_onto(&[], word)
    }

    fn reduce_word_onto(&self, start: &[u8], word: &[u8]) -> Vec<Term> {
        let mut cur: Vec<Term> = vec![(start.iter().copied().collect(), 0, GaussRational::one())];
        for &x in word {
            let mut acc = Accumulator::default();
            for (m, k, c) in &cur {
                for (n, kn, cn) in self.mul_gen(m, x).iter() {
                    acc.add(n, k + kn, &(c * cn));
                }
            }
            cur = acc.finish();
        }
        cur
    }

    /// Reference reducer: repeatedly rewrites the leftmost out-of-order
    /// adjacent pair, without memoization. Exponential in the worst case; kept
    /// as an independent check of [`PbwEngine::normal_order`].
    pub fn normal_order_leftmost(&self, word: &[u8]) -> Vec<Term> {
        let mut pending: Vec<(Vec<u8>, u8, GaussRational)> = vec![(word.to_vec(), 0, GaussRational::one())];
        let mut acc = Accumulator::default();
        while let Some((w, k, c)) = pending.pop() {
            match w.windows(2).position(|p| p[0] > p[1]) {
                None => acc.add(&w.iter().copied().collect::<Monomial>(), k, &c),
                Some(i) => {
                    let (y, x) = (w[i], w[i + 1]);
                    let mut swapped = w.clone();
                    swapped.swap(i, i + 1);
                    pending.push((swapped, k, c.clone()));
                    for (z, kz, cz) in &self.relations[y as usize][x as usize] {
                        let mut v = w[..i].to_vec();
                        v.push(*z);
                        v.extend_from_slice(&w[i + 2..]);
                        pending.push((v, k + kz, &c * cz));
                    }
                }
            }
        }
        acc.finish()
    }
}

#[derive(Default)]
struct Accumulator {
    map: HashMap<(Monomial, u8), GaussRational>,
}

impl Accumulator {
    fn add(&mut self, m: &Monomial, k: u8, c: &GaussRational) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&(m.clone(), k)) {
            Some(v) => *v += c,
            None => {
                self.map.insert((m.clone(), k), c.clone());
            }
        }
    }

    fn finish(self) -> Vec<Term> {
        let mut v: Vec<Term> =
            self.map.into_iter().filter(|(_, c)| !c.is_zero()).map(|((m, k), c)| (m, k, c)).collect();
        v.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Heisenberg-like toy: [1, 0] = 2 (central), so x1 x0 = x0 x1 + x2.
    fn toy() -> PbwEngine {
        PbwEngine::new(3, |y, x| if (y, x) == (1, 0) { vec![(2, 0, GaussRational::one())] } else { vec![] })
    }

    #[test]
    fn single_swap() {
        let e = toy();
        let r = e.normal_order(&[1, 0]);
        let want: Vec<Term> = vec![
            (SmallVec::from_slice(&[0, 1]), 0, GaussRational::one()),
            (SmallVec::from_slice(&[2]), 0, GaussRational::one()),
        ];
        assert_eq!(r, want);
    }

    #[test]
    fn memoized_matches_leftmost() {
        let e = toy();
        for w in [vec![1, 1, 0, 0], vec![2, 1, 0, 1, 0], vec![1, 0, 1, 0, 1]] {
            assert_eq!(e.normal_order(&w), e.normal_order_leftmost(&w));
        }
    }

    #[test]
    fn ordered_words_are_fixed() {
        let e = toy();
        let r = e.normal_order(&[0, 0, 1, 2]);
        assert_eq!(r.len(), 1);
        assert_eq!(&r[0].0[..], &[0, 0, 1, 2]);
    }
}
