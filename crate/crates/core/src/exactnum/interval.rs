//! Certified interval arithmetic over rationals.
//!
//! Every operation rounds its endpoints outward to a working precision given
//! in bits, so enclosures stay small while remaining rigorous. The constants
//! `pi`, `e` and `zeta(s)` come with explicit truncation bounds.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::bernoulli::bernoulli;
use crate::error::{Error, Result};
use crate::{Rational, Scalar, Surd};

/// Default precision cap for adaptive evaluations.
pub const DEFAULT_PRECISION_CAP: u32 = 512;

/// Bits needed for `digits` decimal digits, plus a few guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 16
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

fn bit_len(n: &BigInt) -> i64 {
    n.bits() as i64
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// Rounds toward -inf (`up == false`) or +inf onto a dyadic grid carrying
/// about `prec` significant bits.
fn round_dyadic(x: &Rational, prec: u32, up: bool) -> Rational {
    if x.is_zero() {
        return x.clone();
    }
    let e = prec as i64 - (bit_len(x.numer()) - bit_len(x.denom()));
    let (num, den) = if e >= 0 {
        (x.numer() << e as u64, x.denom().clone())
    } else {
        (x.numer().clone(), x.denom() << (-e) as u64)
    };
    let q = if up {
        num.div_ceil(&den)
    } else {
        num.div_floor(&den)
    };
    if e >= 0 {
        Rational::new(q, pow2(e as u64))
    } else {
        Rational::from_integer(q << (-e) as u64)
    }
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "empty interval");
        Self { lo, hi }
    }

    pub fn point(q: Rational) -> Self {
        Self {
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::point(Rational::from_i64(n))
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn round(self, prec: u32) -> Self {
        Self {
            lo: round_dyadic(&self.lo, prec, false),
            hi: round_dyadic(&self.hi, prec, true),
        }
    }

    /// Certain ordering against another interval, `None` if they overlap.
    pub fn compare(&self, other: &Self) -> Option<Ordering> {
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if self.lo > other.hi {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self, prec: u32) -> Self {
        Self {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
        .round(prec)
    }

    pub fn sub(&self, o: &Self, prec: u32) -> Self {
        Self {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
        .round(prec)
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn mul(&self, o: &Self, prec: u32) -> Self {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().expect("nonempty").clone();
        let hi = c.iter().max().expect("nonempty").clone();
        Self { lo, hi }.round(prec)
    }

    pub fn recip(&self, prec: u32) -> Result<Self> {
        if self.contains_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        }
        .round(prec))
    }

    pub fn div(&self, o: &Self, prec: u32) -> Result<Self> {
        Ok(self.mul(&o.recip(prec)?, prec))
    }

    pub fn powu(&self, e: u64, prec: u32) -> Self {
        let mut acc = Interval::from_int(1);
        let mut base = self.clone();
        let mut e = e;
        if e % 2 == 0 && self.contains_zero() {
            // even power of an interval straddling zero
            let m = std::cmp::max(self.lo.abs(), self.hi.abs());
            let top = Interval::point(m).powu(e, prec);
            return Self {
                lo: Rational::zero(),
                hi: top.hi,
            };
        }
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, prec);
            }
            base = base.mul(&base, prec);
            e >>= 1;
        }
        acc
    }

    /// Enclosure of `sqrt` over a non-negative interval.
    pub fn sqrt(&self, prec: u32) -> Result<Self> {
        if self.lo.is_negative() {
            return Err(Error::InvalidPoint("sqrt of a negative interval".into()));
        }
        Ok(Self {
            lo: sqrt_bound(&self.lo, prec, false),
            hi: sqrt_bound(&self.hi, prec, true),
        })
    }

    pub fn from_surd(x: &Surd, prec: u32) -> Self {
        let root = Interval::from_int(x.s() as i64)
            .sqrt(prec)
            .expect("positive radicand");
        Interval::point(x.a().clone()).add(&Interval::point(x.b().clone()).mul(&root, prec), prec)
    }
}

fn sqrt_bound(q: &Rational, prec: u32, up: bool) -> Rational {
    if q.is_zero() {
        return Rational::zero();
    }
    // sqrt(n/d) = sqrt(n d) / d, scaled by 2^k
    let nd = q.numer() * q.denom();
    let k = (prec as i64 + 2 - bit_len(&nd) / 2).max(0) as u64;
    let t = &nd << (2 * k);
    let mut r = t.sqrt();
    if up && &r * &r != t {
        r += 1;
    }
    Rational::new(r, q.denom() << k)
}

/// `atan(1/x)` bracketed by consecutive partial sums of its alternating series.
fn atan_inv(x: u64, prec: u32) -> Interval {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut pow = x.clone();
    let mut sum = Rational::zero();
    let eps = Rational::new(BigInt::one(), pow2(prec as u64 + 8));
    let mut k = 0u64;
    loop {
        let term = Rational::new(BigInt::one(), BigInt::from(2 * k + 1) * &pow);
        if term < eps {
            // the remainder lies between 0 and the next term, with its sign
            let next = if k % 2 == 0 { term } else { -term };
            let (lo, hi) = if next.is_positive() {
                (sum.clone(), &sum + next)
            } else {
                (&sum + next, sum.clone())
            };
            return Interval::new(lo, hi).round(prec + 4);
        }
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        pow *= &x2;
        k += 1;
    }
}

/// `pi = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(prec: u32) -> Interval {
    let a = atan_inv(5, prec + 8);
    let b = atan_inv(239, prec + 8);
    a.mul(&Interval::from_int(16), prec + 8)
        .sub(&b.mul(&Interval::from_int(4), prec + 8), prec)
}

/// `e = sum 1/k!`, with tail below `2/(N+1)!`.
pub fn euler_e(prec: u32) -> Interval {
    let eps = Rational::new(BigInt::one(), pow2(prec as u64 + 8));
    let mut sum = Rational::zero();
    let mut fact = BigInt::one();
    let mut k = 0u64;
    loop {
        sum += Rational::new(BigInt::one(), fact.clone());
        k += 1;
        fact *= k;
        let tail = Rational::new(BigInt::from(2), fact.clone());
        if tail < eps {
            return Interval::new(sum.clone(), sum + tail).round(prec);
        }
    }
}

/// `zeta(s)` for integer `s >= 2`, by Borwein's accelerated alternating
/// series with error at most `3 / ((3 + sqrt 8)^n (1 - 2^(1-s)))`.
pub fn zeta(s: u32, prec: u32) -> Interval {
    assert!(s >= 2, "zeta needs s >= 2");
    // (3 + sqrt 8) > 29/5, so (5/29)^n bounds (3 + sqrt 8)^-n
    let n = ((prec as f64 + 12.0) / (29.0f64 / 5.0).log2()).ceil() as u64 + 2;
    let mut d = Vec::with_capacity(n as usize + 1);
    let mut acc = Rational::zero();
    // term_i = (n+i-1)! 4^i / ((n-i)! (2i)!)
    let mut term = Rational::new(BigInt::one(), BigInt::from(n)); // i = 0: (n-1)!/n! = 1/n
    for i in 0..=n {
        if i > 0 {
            // ratio term_i / term_{i-1} = (n+i-1) * 4 * (n-i+1) / ((2i-1)(2i))
            term = term
                * Rational::new(
                    BigInt::from(4 * (n + i - 1) * (n - i + 1)),
                    BigInt::from((2 * i - 1) * (2 * i)),
                );
        }
        acc += &term;
        d.push(&acc * Rational::from_integer(BigInt::from(n)));
    }
    let dn = d[n as usize].clone();
    let mut sum = Rational::zero();
    for k in 0..n {
        let t = (&d[k as usize] - &dn) / Rational::from_integer(BigInt::from(k + 1).pow(s));
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
    }
    let factor = Rational::one() - Rational::new(BigInt::one(), pow2(s as u64 - 1));
    let center = -sum / (&dn * &factor);
    let err = Rational::new(
        BigInt::from(3) * BigInt::from(5).pow(n as u32),
        BigInt::from(29).pow(n as u32),
    ) / factor;
    Interval::new(&center - &err, &center + &err).round(prec)
}

/// Whether `5 sqrt(pi n) (n/(pi e))^(2n) > |B_2n| > 4 sqrt(pi n) (n/(pi e))^(2n)`.
///
/// Precision doubles from 64 bits up to `cap_bits`; if the enclosures still
/// straddle `|B_2n|` the result is [`Error::IndeterminatePrecision`].
pub fn stirling_bounds_hold_with_cap(n: u32, cap_bits: u32) -> Result<bool> {
    assert!(n >= 1, "stirling bounds need n >= 1");
    let b = Rational::from(bernoulli(2 * n as usize).abs());
    let mut prec = 64u32;
    loop {
        let p = pi(prec + 16);
        let e = euler_e(prec + 16);
        let nn = Interval::from_int(n as i64);
        let root = p.mul(&nn, prec).sqrt(prec)?;
        let ratio = nn.div(&p.mul(&e, prec), prec)?;
        let base = root.mul(&ratio.powu(2 * n as u64, prec), prec);
        let upper = base.mul(&Interval::from_int(5), prec);
        let lower = base.mul(&Interval::from_int(4), prec);
        let bp = Interval::point(b.clone());
        let up = upper.compare(&bp);
        let low = lower.compare(&bp);
        match (up, low) {
            (Some(Ordering::Greater), Some(Ordering::Less)) => return Ok(true),
            (Some(Ordering::Less), _) | (_, Some(Ordering::Greater)) => return Ok(false),
            _ if prec >= cap_bits => return Err(Error::IndeterminatePrecision { cap_bits }),
            _ => prec = (prec * 2).min(cap_bits),
        }
    }
}

pub fn stirling_bounds_hold(n: u32) -> Result<bool> {
    stirling_bounds_hold_with_cap(n, DEFAULT_PRECISION_CAP)
}

/// Sign of an interval if it is certain.
pub fn certain_sign(x: &Interval) -> Option<Sign> {
    if x.lo.is_positive() {
        Some(Sign::Plus)
    } else if x.hi.is_negative() {
        Some(Sign::Minus)
    } else {
        None
    }
}
