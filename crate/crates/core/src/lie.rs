//! Generators of `iso(g)` and their structure constants
//!
//! ```text
//! [M_{μν}, M_{ρλ}] = i(g_{μλ} M_{νρ} − g_{νλ} M_{μρ} + g_{νρ} M_{μλ} − g_{μρ} M_{νλ})
//! [M_{μν}, P_ρ]    = i(g_{νρ} P_μ − g_{μρ} P_ν)
//! [P_μ, P_λ]       = 0
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::Metric;
use crate::scalar::GaussRational;

/// A basis element of `iso(g)`. Rotation indices are stored with `μ < ν`;
/// `M_{νμ}` is represented as `−M_{μν}` at the coefficient level.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    #[serde(rename = "M")]
    Rotation(usize, usize),
    #[serde(rename = "P")]
    Momentum(usize),
}

impl Generator {
    /// `M_{μν}` as a signed canonical generator; `None` when `μ = ν`.
    pub fn rotation(mu: usize, nu: usize) -> Option<(Generator, i64)> {
        use std::cmp::Ordering::*;
        match mu.cmp(&nu) {
            Less => Some((Generator::Rotation(mu, nu), 1)),
            Greater => Some((Generator::Rotation(nu, mu), -1)),
            Equal => None,
        }
    }

    pub fn is_momentum(&self) -> bool {
        matches!(self, Generator::Momentum(_))
    }

    /// Parse `"P 1"` or `"M 0 1"`.
    pub fn parse(s: &str) -> Result<Generator> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        let idx = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad index {t:?}")));
        match parts.as_slice() {
            ["P", mu] => Ok(Generator::Momentum(idx(mu)?)),
            ["M", mu, nu] => {
                let (mu, nu) = (idx(mu)?, idx(nu)?);
                if mu >= nu {
                    return Err(Error::Parse(format!(
                        "rotation indices must satisfy μ < ν, got M {mu} {nu}"
                    )));
                }
                Ok(Generator::Rotation(mu, nu))
            }
            _ => Err(Error::Parse(format!("expected \"P μ\" or \"M μ ν\", got {s:?}"))),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Momentum(mu) => write!(f, "P_{mu}"),
            Generator::Rotation(mu, nu) => write!(f, "M_{mu}{nu}"),
        }
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Compact generator index. Rotations come first, in lexicographic `(μ, ν)`
/// order, then momenta by `μ`; this is the PBW total order.
pub type GenIndex = u8;

/// A linear combination of generators with scalar coefficients.
pub type LieVector = Vec<(GenIndex, GaussRational)>;

/// Enumeration of the generators of `iso(g)` for a fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieBasis {
    dim: usize,
    gens: Vec<Generator>,
}

impl LieBasis {
    pub fn new(dim: usize) -> LieBasis {
        let mut gens = Vec::new();
        for mu in 0..dim {
            for nu in mu + 1..dim {
                gens.push(Generator::Rotation(mu, nu));
            }
        }
        gens.extend((0..dim).map(Generator::Momentum));
        assert!(gens.len() <= GenIndex::MAX as usize, "dimension too large");
        LieBasis { dim, gens }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn num_rotations(&self) -> usize {
        self.dim * (self.dim - 1) / 2
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn generator(&self, idx: GenIndex) -> Generator {
        self.gens[idx as usize]
    }

    pub fn index(&self, g: Generator) -> Result<GenIndex> {
        let d = self.dim;
        match g {
            Generator::Momentum(mu) if mu < d => Ok((self.num_rotations() + mu) as GenIndex),
            Generator::Rotation(mu, nu) if mu < nu && nu < d => {
                // Rotations before row μ: Σ_{k<μ} (d-1-k).
                let before = mu * (2 * d - mu - 1) / 2;
                Ok((before + (nu - mu - 1)) as GenIndex)
            }
            _ => Err(Error::IndexOutOfRange(format!("{g} in dimension {d}"))),
        }
    }

    pub fn momentum(&self, mu: usize) -> GenIndex {
        (self.num_rotations() + mu) as GenIndex
    }

    /// `M_{μν}` for arbitrary indices, as a signed index.
    pub fn rotation(&self, mu: usize, nu: usize) -> Option<(GenIndex, i64)> {
        Generator::rotation(mu, nu).map(|(g, s)| (self.index(g).expect("in range"), s))
    }
}

/// A deliberate change of one structure constant, used by the negative controls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructurePerturbation {
    pub x: Generator,
    pub y: Generator,
    pub target: Generator,
    pub delta: GaussRational,
}

/// The bracket of two generators, `[x, y]`, with structure constants built
/// from the (not necessarily diagonal) metric `g`.
pub fn bracket(x: Generator, y: Generator, g: &Metric) -> Result<LieVector> {
    let basis = LieBasis::new(g.dim());
    bracket_in(&basis, basis.index(x)?, basis.index(y)?, g)
}

pub(crate) fn bracket_in(basis: &LieBasis, x: GenIndex, y: GenIndex, g: &Metric) -> Result<LieVector> {
    let i = GaussRational::i();
    let mut out: Vec<(GenIndex, GaussRational)> = Vec::new();
    let push_rot = |out: &mut Vec<(GenIndex, GaussRational)>, mu: usize, nu: usize, c: GaussRational| {
        if c.is_zero() {
            return;
        }
        if let Some((idx, s)) = basis.rotation(mu, nu) {
            let c = if s < 0 { -c } else { c };
            out.push((idx, c));
        }
    };
    match (basis.generator(x), basis.generator(y)) {
        (Generator::Momentum(_), Generator::Momentum(_)) => {}
        (Generator::Rotation(mu, nu), Generator::Momentum(rho)) => {
            out.push((basis.momentum(mu), &i * &GaussRational::real(g.g(nu, rho).clone())));
            out.push((basis.momentum(nu), -(&i * &GaussRational::real(g.g(mu, rho).clone()))));
        }
        (Generator::Momentum(_), Generator::Rotation(_, _)) => {
            let v = bracket_in(basis, y, x, g)?;
            return Ok(v.into_iter().map(|(k, c)| (k, -c)).collect());
        }
        (Generator::Rotation(mu, nu), Generator::Rotation(rho, lam)) => {
            let gr = |a: usize, b: usize| &i * &GaussRational::real(g.g(a, b).clone());
            push_rot(&mut out, nu, rho, gr(mu, lam));
            push_rot(&mut out, mu, rho, -gr(nu, lam));
            push_rot(&mut out, mu, lam, gr(nu, rho));
            push_rot(&mut out, nu, lam, -gr(mu, rho));
        }
    }
    Ok(collect(out))
}

/// Merge repeated indices and drop zeros.
pub(crate) fn collect(v: Vec<(GenIndex, GaussRational)>) -> LieVector {
    let mut acc: std::collections::BTreeMap<GenIndex, GaussRational> = Default::default();
    for (k, c) in v {
        *acc.entry(k).or_insert_with(GaussRational::zero) += &c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Full structure-constant table `table[x][y] = [x, y]`.
#[derive(Clone, Debug)]
pub struct StructureTable {
    basis: LieBasis,
    table: Vec<Vec<LieVector>>,
}

impl StructureTable {
    pub fn new(g: &Metric, perturbation: Option<&StructurePerturbation>) -> Result<StructureTable> {
        let basis = LieBasis::new(g.dim());
        let n = basis.len();
        let mut table = vec![vec![Vec::new(); n]; n];
        for x in 0..n {
            for y in 0..n {
                table[x][y] = bracket_in(&basis, x as GenIndex, y as GenIndex, g)?;
            }
        }
        if let Some(p) = perturbation {
            let (x, y, t) = (basis.index(p.x)?, basis.index(p.y)?, basis.index(p.target)?);
            if x == y {
                return Err(Error::Invalid(format!("[{}, {}] vanishes identically", p.x, p.y)));
            }
            // Kept antisymmetric, so the change is seen whichever order the
            // rewriting meets the pair in.
            let mut v = table[x as usize][y as usize].clone();
            v.push((t, p.delta.clone()));
            table[x as usize][y as usize] = collect(v);
            let mut w = table[y as usize][x as usize].clone();
            w.push((t, -&p.delta));
            table[y as usize][x as usize] = collect(w);
        }
        Ok(StructureTable { basis, table })
    }

    pub fn basis(&self) -> &LieBasis {
        &self.basis
    }

    pub fn get(&self, x: GenIndex, y: GenIndex) -> &LieVector {
        &self.table[x as usize][y as usize]
    }
}
