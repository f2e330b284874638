use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{Num, One, Signed, ToPrimitive};

use crate::Rational;

/// Field scalar the formula kernels are written over.
///
/// [`Rational`] is the exact instantiation used for every decision; `f64` and
/// `f32` exist for approximate display and quick numeric cross-checks.
pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + Send + Sync {
    fn from_i64(n: i64) -> Self;
    fn from_bigint(n: &BigInt) -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn approx(&self) -> f64;

    fn ratio(p: i64, q: i64) -> Self {
        Self::from_i64(p) / Self::from_i64(q)
    }

    fn powu(&self, e: u64) -> Self {
        num_traits::pow(self.clone(), e as usize)
    }

    /// `2^e` for any sign of `e`.
    fn two_pow(e: i64) -> Self {
        let p = Self::from_i64(2).powu(e.unsigned_abs());
        if e >= 0 {
            p
        } else {
            Self::one() / p
        }
    }
}

impl Scalar for Rational {
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn from_bigint(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn approx(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn ratio(p: i64, q: i64) -> Self {
        Rational::new(BigInt::from(p), BigInt::from(q))
    }
    fn powu(&self, e: u64) -> Self {
        rational_pow(self, e)
    }
    fn two_pow(e: i64) -> Self {
        let p = BigInt::one() << e.unsigned_abs();
        if e >= 0 {
            Rational::from_integer(p)
        } else {
            Rational::new_raw(BigInt::one(), p)
        }
    }
}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::NAN)
    }
    fn from_rational(q: &Rational) -> Self {
        ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
    }
    fn approx(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_i64(n: i64) -> Self {
        n as f32
    }
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f32().unwrap_or(f32::NAN)
    }
    fn from_rational(q: &Rational) -> Self {
        ToPrimitive::to_f32(q).unwrap_or(f32::NAN)
    }
    fn approx(&self) -> f64 {
        *self as f64
    }
}

/// Exact integer power of a rational base `p/q`.
pub fn rational_pow(base: &Rational, e: u64) -> Rational {
    // numerator and denominator stay coprime under powers
    let e = u32::try_from(e).expect("exponent fits in u32");
    Rational::new_raw(base.numer().pow(e), base.denom().pow(e))
}
