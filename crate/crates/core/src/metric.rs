//! Symmetric nondegenerate metrics over ℚ and the small amount of exact
//! linear algebra needed around them.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, int, Rational};

/// Dense square matrix over ℚ, row-major.
pub type RatMatrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> RatMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = Rational::zero();
                    for l in 0..k {
                        if !a[i][l].is_zero() && !b[l][j].is_zero() {
                            acc += &a[i][l] * &b[l][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &RatMatrix) -> RatMatrix {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len()).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_vec(a: &RatMatrix, v: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).fold(Rational::zero(), |s, t| s + t))
        .collect()
}

/// Exact inverse by Gauss–Jordan elimination.
pub fn invert(a: &RatMatrix) -> Result<RatMatrix> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::DegenerateMetric)?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Indices of a maximal linearly independent subset of `vectors`, chosen
/// greedily in order (lowest indices win).
pub fn independent_subset(vectors: &[Vec<Rational>]) -> Vec<usize> {
    let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut w = v.clone();
        for (pc, row) in &echelon {
            if !w[*pc].is_zero() {
                let f = w[*pc].clone() / &row[*pc];
                for (x, y) in w.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(pc) = w.iter().position(|x| !x.is_zero()) {
            echelon.push((pc, w));
            chosen.push(idx);
        }
    }
    chosen
}

/// Congruence diagonalization of a symmetric matrix: returns `(basis, diag)`
/// with `basisᵀ · a · basis = diag(diag)`, where `basis` columns are the new
/// basis vectors. Uses simultaneous row/column pivoting; a zero diagonal with a
/// nonzero off-diagonal entry is resolved by the substitution `e_i → e_i + e_j`.
pub fn congruence_diagonalize(a: &RatMatrix) -> (RatMatrix, Vec<Rational>) {
    let n = a.len();
    let mut m = a.clone();
    let mut basis = identity(n);
    for k in 0..n {
        if m[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                swap_sym(&mut m, &mut basis, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                // e_k ← e_k + e_j gives m_kk = 2 m_kj ≠ 0 (m_jj = 0 here).
                add_sym(&mut m, &mut basis, k, j, &Rational::one());
            } else {
                continue;
            }
        }
        let p = m[k][k].clone();
        for j in k + 1..n {
            if !m[k][j].is_zero() {
                let f = -(&m[k][j] / &p);
                add_sym(&mut m, &mut basis, j, k, &f);
            }
        }
    }
    let diag = (0..n).map(|i| m[i][i].clone()).collect();
    (basis, diag)
}

// Swap basis vectors i and j.
fn swap_sym(m: &mut RatMatrix, basis: &mut RatMatrix, i: usize, j: usize) {
    m.swap(i, j);
    for row in m.iter_mut() {
        row.swap(i, j);
    }
    for row in basis.iter_mut() {
        row.swap(i, j);
    }
}

// e_i ← e_i + f e_j.
fn add_sym(m: &mut RatMatrix, basis: &mut RatMatrix, i: usize, j: usize, f: &Rational) {
    let n = m.len();
    for c in 0..n {
        let v = &m[j][c] * f;
        m[i][c] += v;
    }
    for r in 0..n {
        let v = &m[r][j] * f;
        m[r][i] += v;
    }
    for row in basis.iter_mut() {
        let v = &row[j] * f;
        row[i] += v;
    }
}

/// A symmetric nondegenerate real metric `g_{μν}` with cached inverse and
/// signature `(p, q)` = (number of positive, number of negative directions).
#[derive(Clone, PartialEq, Eq)]
pub struct Metric {
    entries: RatMatrix,
    inverse: RatMatrix,
    signature: (usize, usize),
}

impl Metric {
    pub fn new(entries: RatMatrix) -> Result<Metric> {
        let d = entries.len();
        if d < 2 {
            return Err(Error::InvalidMetric(format!("dimension must be at least 2, got {d}")));
        }
        if entries.iter().any(|r| r.len() != d) {
            return Err(Error::InvalidMetric("metric must be square".into()));
        }
        for i in 0..d {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::InvalidMetric(format!("not symmetric at ({i},{j})")));
                }
            }
        }
        let inverse = invert(&entries)?;
        let signature = signature_of(&entries)?;
        Ok(Metric { entries, inverse, signature })
    }

    pub fn diagonal(diag: &[i64]) -> Result<Metric> {
        let d = diag.len();
        let mut m = vec![vec![Rational::zero(); d]; d];
        for (i, &x) in diag.iter().enumerate() {
            m[i][i] = int(x);
        }
        Metric::new(m)
    }

    /// `diag(-1, 1, …, 1)` in `dim` dimensions.
    pub fn minkowski(dim: usize) -> Metric {
        let mut diag = vec![1; dim];
        diag[0] = -1;
        Metric::diagonal(&diag).expect("Minkowski metric is nondegenerate")
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn g(&self, mu: usize, nu: usize) -> &Rational {
        &self.entries[mu][nu]
    }

    pub fn g_inv(&self, mu: usize, nu: usize) -> &Rational {
        &self.inverse[mu][nu]
    }

    pub fn entries(&self) -> &RatMatrix {
        &self.entries
    }

    pub fn inverse(&self) -> &RatMatrix {
        &self.inverse
    }

    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    pub fn is_definite(&self) -> bool {
        self.signature.0 == 0 || self.signature.1 == 0
    }

    /// `g(u, v)`.
    pub fn inner(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() && !self.entries[i][j].is_zero() {
                    acc += ui * &self.entries[i][j] * vj;
                }
            }
        }
        acc
    }

    /// Lower an index: `v_μ = g_{μν} v^ν`.
    pub fn lower(&self, v: &[Rational]) -> Vec<Rational> {
        mat_vec(&self.entries, v)
    }

    /// The congruence transform `Bᵀ g B`, the metric in the basis whose
    /// vectors are the columns of `b`.
    pub fn congruence(&self, b: &RatMatrix) -> Result<Metric> {
        Metric::new(mat_mul(&transpose(b), &mat_mul(&self.entries, b)))
    }

    /// The metric `-g`.
    pub fn negated(&self) -> Metric {
        Metric::new(self.entries.iter().map(|r| r.iter().map(|x| -x).collect()).collect())
            .expect("negation preserves nondegeneracy")
    }
}

/// Signature `(p, q)` of a symmetric matrix via Sylvester's law of inertia.
pub fn signature_of(a: &RatMatrix) -> Result<(usize, usize)> {
    let (_, diag) = congruence_diagonalize(a);
    let p = diag.iter().filter(|x| x.is_positive()).count();
    let q = diag.iter().filter(|x| x.is_negative()).count();
    if p + q != a.len() {
        return Err(Error::DegenerateMetric);
    }
    Ok((p, q))
}

impl fmt::Debug for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| r.iter().map(format_rational).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "Metric[{}]", rows.join("; "))
    }
}
