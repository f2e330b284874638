//! Even integral lattices given by Gram matrices, their discriminant groups,
//! stably reflective vectors and branch-divisor censuses.

mod census;
pub mod matrix;
mod parse;
mod reflective;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use matrix::{det_bareiss, signature, smith_diagonal, to_big};

pub use census::{count_sqrt1, orbit_census, BranchCensus, CensusEntry, SqrtModulus};
pub use parse::parse_lattice;
pub use reflective::{
    classify_reflective, complement_invariants, complement_lattice, div, index_and_det,
    reflection_fixes_discriminant, ComplementLabel, ReflectiveClass, SignCase,
};

/// Which family a lattice was built as, so complement labels can be named.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SeriesTag {
    /// `2U + mE8(-1)`
    Unimodular { m: u32 },
    /// `2U + mE8(-1) + <-2d>`
    K3 { m: u32, d: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lattice {
    gram: Vec<Vec<i64>>,
    pub label: Option<String>,
    pub series: Option<SeriesTag>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeVector {
    pub coords: Vec<i64>,
}

impl LatticeVector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn content(&self) -> u64 {
        self.coords
            .iter()
            .fold(0u64, |g, &c| num_integer::gcd(g, c.unsigned_abs()))
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantInfo {
    /// Non-trivial invariant factors, each dividing the next.
    pub invariant_factors: Vec<u64>,
    /// Exponent of the group, the last invariant factor (1 if trivial).
    pub exponent: u64,
    pub abs_det: u64,
}

impl DiscriminantInfo {
    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }
}

/// One summand of a direct sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Block {
    U,
    U2,
    E8Neg,
    Scalar(i64),
    /// Symmetric 2x2 block `[[a, b], [b, c]]`.
    Binary(i64, i64, i64),
}

/// Negated Cartan matrix of E8 (Bourbaki numbering).
pub fn e8_neg_gram() -> Vec<Vec<i64>> {
    const EDGES: [(usize, usize); 7] = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
    let mut g = vec![vec![0i64; 8]; 8];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -2;
    }
    for (a, b) in EDGES {
        g[a][b] = 1;
        g[b][a] = 1;
    }
    g
}

impl Block {
    fn gram(&self) -> Vec<Vec<i64>> {
        match *self {
            Block::U => vec![vec![0, 1], vec![1, 0]],
            Block::U2 => vec![vec![0, 2], vec![2, 0]],
            Block::E8Neg => e8_neg_gram(),
            Block::Scalar(k) => vec![vec![k]],
            Block::Binary(a, b, c) => vec![vec![a, b], vec![b, c]],
        }
    }
}

impl Lattice {
    pub fn from_gram(gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(Error::NotSymmetric);
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(Self {
            gram,
            label: None,
            series: None,
        })
    }

    /// Orthogonal direct sum of blocks.
    pub fn direct_sum(blocks: &[Block]) -> Self {
        let grams: Vec<_> = blocks.iter().map(Block::gram).collect();
        let n: usize = grams.iter().map(Vec::len).sum();
        let mut gram = vec![vec![0i64; n]; n];
        let mut off = 0;
        for g in grams {
            for (i, row) in g.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    gram[off + i][off + j] = v;
                }
            }
            off += g.len();
        }
        Self {
            gram,
            label: None,
            series: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    fn with_series(mut self, tag: SeriesTag) -> Self {
        self.series = Some(tag);
        self
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn is_even(&self) -> bool {
        self.gram.iter().enumerate().all(|(i, r)| r[i] % 2 == 0)
    }

    pub fn det(&self) -> BigInt {
        det_bareiss(&to_big(&self.gram))
    }

    pub fn signature(&self) -> (usize, usize) {
        signature(&to_big(&self.gram))
    }

    pub fn pair(&self, a: &[i64], b: &[i64]) -> i128 {
        let mut s = 0i128;
        for (i, row) in self.gram.iter().enumerate() {
            if a[i] == 0 {
                continue;
            }
            let gb: i128 = row
                .iter()
                .zip(b)
                .map(|(&g, &x)| g as i128 * x as i128)
                .sum();
            s += a[i] as i128 * gb;
        }
        s
    }

    pub fn norm(&self, v: &LatticeVector) -> i128 {
        self.pair(&v.coords, &v.coords)
    }

    pub fn discriminant_info(&self) -> Result<DiscriminantInfo> {
        let diag = smith_diagonal(&to_big(&self.gram));
        if diag.iter().any(Zero::is_zero) {
            return Err(Error::SingularGram);
        }
        let to_u64 = |x: &BigInt| x.to_u64().ok_or(Error::Overflow("discriminant group"));
        let invariant_factors: Vec<u64> = diag
            .iter()
            .filter(|x| !x.is_zero() && x.abs() != BigInt::from(1))
            .map(to_u64)
            .collect::<Result<_>>()?;
        let abs_det = to_u64(&self.det().abs())?;
        let exponent = invariant_factors.last().copied().unwrap_or(1);
        Ok(DiscriminantInfo {
            invariant_factors,
            exponent,
            abs_det,
        })
    }

    fn series_blocks(prefix: &[Block], m: u32, suffix: &[Block]) -> Self {
        let mut blocks = prefix.to_vec();
        blocks.extend(std::iter::repeat(Block::E8Neg).take(m as usize));
        blocks.extend_from_slice(suffix);
        Self::direct_sum(&blocks)
    }

    /// `2U + mE8(-1)`, signature `(2, 8m+2)`.
    pub fn unimodular(m: u32) -> Self {
        Self::series_blocks(&[Block::U, Block::U], m, &[])
            .with_label(format!("II_{{2,{}}}", 8 * m + 2))
            .with_series(SeriesTag::Unimodular { m })
    }

    /// `2U + mE8(-1) + <-2d>`.
    pub fn k3(m: u32, d: u64) -> Result<Self> {
        let k = scalar_entry(d, -2)?;
        Ok(
            Self::series_blocks(&[Block::U, Block::U], m, &[Block::Scalar(k)])
                .with_label(format!("L_{{{}}}^({m})", 2 * d))
                .with_series(SeriesTag::K3 { m, d }),
        )
    }

    /// Complement of a (-2)-vector in the unimodular series: `U + mE8(-1) + <2>`.
    pub fn k_ii(m: u32) -> Self {
        Self::series_blocks(&[Block::U], m, &[Block::Scalar(2)]).with_label(format!("K_II^({m})"))
    }

    /// `U + mE8(-1) + <2> + <-2d>`.
    pub fn k_2d(m: u32, d: u64) -> Result<Self> {
        let k = scalar_entry(d, -2)?;
        Ok(
            Self::series_blocks(&[Block::U], m, &[Block::Scalar(2), Block::Scalar(k)])
                .with_label(format!("K_{{{}}}^({m})", 2 * d)),
        )
    }

    /// `U + mE8(-1) + [[2, 1], [1, (1-d)/2]]`, defined for `d = 1 mod 4`.
    pub fn n_2d(m: u32, d: u64) -> Result<Self> {
        if d % 4 != 1 {
            return Err(Error::InvalidPoint(format!(
                "N_2d needs d = 1 mod 4, got d = {d}"
            )));
        }
        let c = (1 - scalar_entry(d, 1)?) / 2;
        Ok(
            Self::series_blocks(&[Block::U], m, &[Block::Binary(2, 1, c)])
                .with_label(format!("N_{{{}}}^({m})", 2 * d)),
        )
    }

    /// `U + mE8(-1) + <2> + <-2>`.
    pub fn k_2(m: u32) -> Self {
        Self::series_blocks(&[Block::U], m, &[Block::Scalar(2), Block::Scalar(-2)])
            .with_label(format!("K_2^({m})"))
    }

    /// `U + U(2) + mE8(-1)`.
    pub fn t(m: u32) -> Self {
        Self::series_blocks(&[Block::U, Block::U2], m, &[])
            .with_label(format!("T_{{2,{}}}", 8 * m + 2))
    }
}

fn scalar_entry(d: u64, factor: i64) -> Result<i64> {
    i64::try_from(d)
        .ok()
        .and_then(|d| d.checked_mul(factor))
        .ok_or(Error::Overflow("lattice entry"))
}
