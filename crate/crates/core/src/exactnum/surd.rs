//! Quadratic surds `a + b*sqrt(s)` with a fixed square-free radicand.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::arith::{is_squarefree, squarefree_decomposition};
use super::ratio_str;
use crate::error::{Error, Result};
use crate::{Rational, Scalar};

/// `a + b*sqrt(s)` with `s` square-free. When `b = 0` the radicand is `1`,
/// and a radicand of `1` is always folded into `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd<T> {
    a: T,
    b: T,
    s: u64,
}

impl<T: Scalar> QuadSurd<T> {
    pub fn new(a: T, b: T, s: u64) -> Result<Self> {
        if s == 0 || !is_squarefree(s) {
            return Err(Error::Parse(format!("radicand {s} is not square-free")));
        }
        Ok(Self::normalized(a, b, s))
    }

    fn normalized(a: T, b: T, s: u64) -> Self {
        if b.is_zero() {
            Self { a, b, s: 1 }
        } else if s == 1 {
            Self {
                a: a + b,
                b: T::zero(),
                s: 1,
            }
        } else {
            Self { a, b, s }
        }
    }

    pub fn rational(a: T) -> Self {
        Self {
            a,
            b: T::zero(),
            s: 1,
        }
    }

    /// `sqrt(n)` for any positive integer `n`.
    pub fn sqrt_of(n: u64) -> Self {
        let (s, c) = squarefree_decomposition(n);
        Self::normalized(T::zero(), T::from_i64(c as i64), s)
    }

    /// `x / sqrt(n)`, i.e. `x * sqrt(s) / (c * s)` where `n = c^2 s`.
    pub fn over_sqrt_of(x: T, n: u64) -> Self {
        let (s, c) = squarefree_decomposition(n);
        let denom = T::from_i64(c as i64) * T::from_i64(s as i64);
        Self::normalized(T::zero(), x / denom, s)
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn into_rational(self) -> Option<T> {
        self.b.is_zero().then_some(self.a)
    }

    fn common_radicand(&self, other: &Self) -> Result<u64> {
        match (self.s, other.s) {
            (x, y) if x == y => Ok(x),
            (1, y) => Ok(y),
            (x, 1) => Ok(x),
            (x, y) => Err(Error::MixedRadicals(x, y)),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let s = self.common_radicand(other)?;
        Ok(Self::normalized(
            self.a.clone() + other.a.clone(),
            self.b.clone() + other.b.clone(),
            s,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.clone().neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let s = self.common_radicand(other)?;
        let rs = T::from_i64(s as i64);
        let a = self.a.clone() * other.a.clone() + self.b.clone() * other.b.clone() * rs;
        let b = self.a.clone() * other.b.clone() + self.b.clone() * other.a.clone();
        Ok(Self::normalized(a, b, s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let s = self.common_radicand(other)?;
        let norm = other.norm();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let conj = Self::normalized(other.a.clone(), -other.b.clone(), s);
        let num = self.checked_mul(&conj)?;
        Ok(Self::normalized(num.a / norm.clone(), num.b / norm, s))
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::normalized(
            self.a.clone() * k.clone(),
            self.b.clone() * k.clone(),
            self.s,
        )
    }

    /// `a^2 - s b^2`.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone()
            - T::from_i64(self.s as i64) * self.b.clone() * self.b.clone()
    }

    /// Sign of the value, decided with at most one squaring.
    pub fn signum(&self) -> Ordering {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        match (sa, sb) {
            (x, Ordering::Equal) => x,
            (Ordering::Equal, y) => y,
            (x, y) if x == y => x,
            // opposite signs: compare a^2 with s b^2
            (x, _) => {
                let a2 = self.a.clone() * self.a.clone();
                let b2s = T::from_i64(self.s as i64) * self.b.clone() * self.b.clone();
                match a2.partial_cmp(&b2s).unwrap_or(Ordering::Equal) {
                    Ordering::Equal => Ordering::Equal,
                    Ordering::Greater => x,
                    Ordering::Less => x.reverse(),
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.a.approx() + self.b.approx() * (self.s as f64).sqrt()
    }
}

impl QuadSurd<Rational> {
    /// Floating-point image, for display.
    pub fn to_approx(&self) -> QuadSurd<f64> {
        QuadSurd {
            a: self.a.approx(),
            b: self.b.approx(),
            s: self.s,
        }
    }
}

fn sign_of<T: Scalar>(x: &T) -> Ordering {
    x.partial_cmp(&T::zero()).unwrap_or(Ordering::Equal)
}

impl<T: Scalar> PartialOrd for QuadSurd<T> {
    /// Exact comparison when both sides share a radicand (or one is rational);
    /// `None` for genuinely mixed radicals.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.checked_sub(other).ok().map(|d| d.signum())
    }
}

impl<T: Scalar> Neg for QuadSurd<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
            s: self.s,
        }
    }
}

// Operator forms panic on mixed radicals; use the `checked_*` methods when the
// radicands are not known to agree.
impl<T: Scalar> Add for QuadSurd<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs)
            .expect("mixed radicals in QuadSurd addition")
    }
}

impl<T: Scalar> Sub for QuadSurd<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs)
            .expect("mixed radicals in QuadSurd subtraction")
    }
}

impl<T: Scalar> Mul for QuadSurd<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs)
            .expect("mixed radicals in QuadSurd multiplication")
    }
}

impl<T: Scalar> Zero for QuadSurd<T> {
    fn zero() -> Self {
        Self::rational(T::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Scalar> One for QuadSurd<T> {
    fn one() -> Self {
        Self::rational(T::one())
    }
}

impl fmt::Display for QuadSurd<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "({})*sqrt({})", self.b, self.s)
        } else {
            write!(f, "{} + ({})*sqrt({})", self.a, self.b, self.s)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SurdRepr {
    #[serde(with = "ratio_str")]
    a: Rational,
    #[serde(with = "ratio_str")]
    b: Rational,
    s: u64,
}

impl Serialize for QuadSurd<Rational> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SurdRepr {
            a: self.a.clone(),
            b: self.b.clone(),
            s: self.s,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuadSurd<Rational> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = SurdRepr::deserialize(deserializer)?;
        QuadSurd::new(r.a, r.b, r.s).map_err(serde::de::Error::custom)
    }
}
