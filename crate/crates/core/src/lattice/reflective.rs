//! Stably reflective vectors and their orthogonal complements.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::{integer_kernel, rational_inverse, restricted_gram, to_big};
use super::{Lattice, LatticeVector, SeriesTag};
use crate::error::{Error, Result};
use crate::Rational;

/// Whether the reflection itself or its negative lies in the stable group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SignCase {
    PlusSigma,
    MinusSigma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComplementLabel {
    #[serde(rename = "K_II")]
    KII,
    #[serde(rename = "K_2d")]
    K2d,
    #[serde(rename = "N_2d")]
    N2d,
    /// `2U + mE8(-1)`; the same lattice appears as `M_{2,8m+2}` in the
    /// obstruction bookkeeping.
    #[serde(rename = "II")]
    IIUnimodular,
    #[serde(rename = "K_2")]
    K2,
    #[serde(rename = "T")]
    T,
    /// Census row merging the two possible complements of div-d vectors.
    #[serde(rename = "K_2|T")]
    K2OrT,
}

impl ComplementLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            ComplementLabel::KII => "K_II",
            ComplementLabel::K2d => "K_2d",
            ComplementLabel::N2d => "N_2d",
            ComplementLabel::IIUnimodular => "II",
            ComplementLabel::K2 => "K_2",
            ComplementLabel::T => "T",
            ComplementLabel::K2OrT => "K_2|T",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectiveClass {
    pub norm: i64,
    pub divisor: u64,
    pub sign_case: SignCase,
    pub complement_label: Option<ComplementLabel>,
    /// `D = 4, r^2 = -4, div(r) = 2`: the branch component may be a proper
    /// quotient, so the complement description is not guaranteed.
    pub exceptional: bool,
}

fn check_vector(l: &Lattice, r: &LatticeVector) -> Result<()> {
    if r.coords.len() != l.rank() {
        return Err(Error::RankMismatch {
            rank: l.rank(),
            found: r.coords.len(),
        });
    }
    if r.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(())
}

/// Positive generator of the ideal `(r, L)`.
pub fn div(l: &Lattice, r: &LatticeVector) -> Result<u64> {
    check_vector(l, r)?;
    let g = l.gram.iter().fold(0u128, |g, row| {
        let v: i128 = row
            .iter()
            .zip(&r.coords)
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum();
        num_integer::gcd(g, v.unsigned_abs())
    });
    u64::try_from(g).map_err(|_| Error::Overflow("divisor"))
}

/// `(|det K_r|, [L : <r> + K_r])` from the determinant and index formulas,
/// without restricting the index.
pub fn index_and_det(l: &Lattice, r: &LatticeVector) -> Result<(u128, u64)> {
    check_vector(l, r)?;
    if !r.is_primitive() {
        return Err(Error::NotPrimitive(r.content()));
    }
    let norm = l.norm(r);
    if norm == 0 {
        return Err(Error::ZeroVector);
    }
    let dv = div(l, r)? as u128;
    let abs_norm = norm.unsigned_abs();
    let det = l
        .det()
        .abs()
        .to_u128()
        .ok_or(Error::Overflow("determinant"))?;
    let num = det
        .checked_mul(abs_norm)
        .ok_or(Error::Overflow("complement determinant"))?;
    let index = abs_norm / dv;
    Ok((
        num / (dv * dv),
        u64::try_from(index).map_err(|_| Error::Overflow("index"))?,
    ))
}

/// Complement determinant and index, rejecting indices other than 1 or 2.
pub fn complement_invariants(l: &Lattice, r: &LatticeVector) -> Result<(u128, u64)> {
    let (det, index) = index_and_det(l, r)?;
    if index != 1 && index != 2 {
        return Err(Error::IndexOutOfRange(index));
    }
    Ok((det, index))
}

/// The orthogonal complement of `r` as a lattice in a basis of the integer
/// kernel of `x -> (x, r)`.
pub fn complement_lattice(l: &Lattice, r: &LatticeVector) -> Result<Lattice> {
    check_vector(l, r)?;
    let g = to_big(&l.gram);
    let rb: Vec<BigInt> = r.coords.iter().map(|&c| BigInt::from(c)).collect();
    let row: Vec<BigInt> = g
        .iter()
        .map(|gr| gr.iter().zip(&rb).map(|(a, b)| a * b).sum())
        .collect();
    let basis = integer_kernel(&row);
    let k = restricted_gram(&g, &basis);
    let gram = k
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.to_i64().ok_or(Error::Overflow("complement gram")))
                .collect()
        })
        .collect::<Result<Vec<Vec<i64>>>>()?;
    Lattice::from_gram(gram)
}

/// Independent check that `sigma_r` (`PlusSigma`) or `-sigma_r` (`MinusSigma`)
/// is an integral isometry acting trivially on the discriminant group.
pub fn reflection_fixes_discriminant(
    l: &Lattice,
    r: &LatticeVector,
    case: SignCase,
) -> Result<bool> {
    check_vector(l, r)?;
    let norm = l.norm(r);
    if norm == 0 {
        return Err(Error::ZeroVector);
    }
    let n = l.rank();
    let g = to_big(&l.gram);
    let inv = rational_inverse(&g).ok_or(Error::SingularGram)?;
    let rq: Vec<Rational> = r
        .coords
        .iter()
        .map(|&c| Rational::from_integer(BigInt::from(c)))
        .collect();
    let two_over = Rational::new(BigInt::from(2), BigInt::from(norm));
    let sigma = |v: &[Rational]| -> Vec<Rational> {
        // (v, r) in coordinates
        let vr: Rational = (0..n)
            .map(|i| {
                let gi: Rational = (0..n)
                    .map(|j| Rational::from_integer(g[i][j].clone()) * &rq[j])
                    .sum();
                &v[i] * gi
            })
            .sum();
        let c = &two_over * vr;
        v.iter().zip(&rq).map(|(x, y)| x - &c * y).collect()
    };
    let integral = |v: &[Rational]| v.iter().all(|x| x.is_integer());
    let sign = match case {
        SignCase::PlusSigma => Rational::one(),
        SignCase::MinusSigma => -Rational::one(),
    };
    // integrality on the basis of L
    for i in 0..n {
        let e: Vec<Rational> = (0..n)
            .map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        if !integral(&sigma(&e)) {
            return Ok(false);
        }
    }
    // dual basis vectors are the columns of the inverse Gram matrix
    for i in 0..n {
        let v: Vec<Rational> = (0..n).map(|j| inv[j][i].clone()).collect();
        let w: Vec<Rational> = sigma(&v)
            .iter()
            .zip(&v)
            .map(|(s, x)| &sign * s - x)
            .collect();
        if !integral(&w) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Discriminant form of an even lattice takes values in `Z` rather than
/// `Z/2`-valued with half-integers; distinguishes `T` from `K_2`.
fn discriminant_form_integral(k: &Lattice) -> Result<bool> {
    let inv = rational_inverse(&to_big(&k.gram)).ok_or(Error::SingularGram)?;
    Ok((0..k.rank()).all(|i| inv[i][i].is_integer()))
}

/// Decides stable reflectivity by the arithmetic criteria: `r^2 = -2`, or
/// `r^2 = -2D` with `div(r) = D` odd, or `r^2 = -D` with `div(r)` one of
/// `D, D/2`, where `D` is the exponent of the discriminant group.
pub fn classify_reflective(l: &Lattice, r: &LatticeVector) -> Result<Option<ReflectiveClass>> {
    check_vector(l, r)?;
    if !l.is_even() {
        return Err(Error::NotEven);
    }
    let (p, q) = l.signature();
    if p != 2 || p + q != l.rank() {
        return Err(Error::WrongSignature(p, q));
    }
    if !r.is_primitive() {
        return Err(Error::NotPrimitive(r.content()));
    }
    let norm128 = l.norm(r);
    if norm128 >= 0 {
        return Ok(None);
    }
    let norm = i64::try_from(norm128).map_err(|_| Error::Overflow("norm"))?;
    let dv = div(l, r)?;
    let big_d = l.discriminant_info()?.exponent;
    let abs = norm.unsigned_abs();
    let sign_case = if abs == 2 {
        SignCase::PlusSigma
    } else if (abs == 2 * big_d && dv == big_d && big_d % 2 == 1)
        || (abs == big_d && (dv == big_d || (big_d % 2 == 0 && dv == big_d / 2)))
    {
        SignCase::MinusSigma
    } else {
        return Ok(None);
    };
    let complement_label = match l.series {
        Some(SeriesTag::Unimodular { .. }) => Some(ComplementLabel::KII),
        Some(SeriesTag::K3 { d, .. }) => {
            if abs == 2 * d && dv == 2 * d {
                Some(ComplementLabel::IIUnimodular)
            } else if abs == 2 && dv == 1 {
                Some(ComplementLabel::K2d)
            } else if abs == 2 && dv == 2 {
                Some(ComplementLabel::N2d)
            } else if abs == 2 * d && dv == d {
                let k = complement_lattice(l, r)?;
                Some(if discriminant_form_integral(&k)? {
                    ComplementLabel::T
                } else {
                    ComplementLabel::K2
                })
            } else {
                None
            }
        }
        None => None,
    };
    Ok(Some(ReflectiveClass {
        norm,
        divisor: dv,
        sign_case,
        complement_label,
        exceptional: big_d == 4 && abs == 4 && dv == 2,
    }))
}
