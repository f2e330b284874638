//! Bernoulli numbers and polynomials.
//!
//! `B_1 = -1/2`. Exact values are memoised in a process-wide table that only
//! ever grows; readers never block each other.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Rational, Scalar};

static TABLE: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// The Bernoulli number `B_n` (with `B_1 = -1/2`).
pub fn bernoulli(n: usize) -> Rational {
    if n > 1 && n % 2 == 1 {
        return Rational::zero();
    }
    if let Some(b) = TABLE.read().expect("bernoulli table poisoned").get(n) {
        return b.clone();
    }
    let mut table = TABLE.write().expect("bernoulli table poisoned");
    extend_table(&mut table, n);
    table[n].clone()
}

/// `B_0, ..., B_n` as a vector.
pub fn bernoulli_upto(n: usize) -> Vec<Rational> {
    bernoulli(n);
    TABLE.read().expect("bernoulli table poisoned")[..=n].to_vec()
}

// B_n = -1/(n+1) * sum_{k<n} C(n+1, k) B_k
fn extend_table(table: &mut Vec<Rational>, n: usize) {
    while table.len() <= n {
        let j = table.len();
        let next = if j == 0 {
            Rational::one()
        } else if j > 1 && j % 2 == 1 {
            Rational::zero()
        } else {
            let mut binom = BigInt::one();
            let mut acc = Rational::zero();
            for (k, b) in table.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * Rational::from_integer(binom.clone());
                }
                binom = binom * BigInt::from(j + 1 - k) / BigInt::from(k + 1);
            }
            -acc / Rational::from_integer(BigInt::from(j + 1))
        };
        table.push(next);
    }
}

/// The Bernoulli polynomial `B_n(x) = sum_k C(n, k) B_k x^(n-k)`.
pub fn bernoulli_poly<T: Scalar>(n: usize, x: &T) -> T {
    let bs = bernoulli_upto(n);
    // Horner over descending powers of x: coefficients C(n,k) B_k for k = 0..n
    let mut binom = BigInt::one();
    let mut coeffs = Vec::with_capacity(n + 1);
    for (k, b) in bs.iter().enumerate() {
        coeffs.push(T::from_rational(
            &(b * Rational::from_integer(binom.clone())),
        ));
        binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    coeffs
        .into_iter()
        .fold(T::zero(), |acc, c| acc * x.clone() + c)
}

/// `|B_2 B_4 ... B_hi|` for even `hi >= 2`.
pub fn even_bernoulli_abs_product(hi: usize) -> Rational {
    (1..=hi / 2)
        .map(|i| num_traits::abs(bernoulli(2 * i)))
        .fold(Rational::one(), |acc, b| acc * b)
}
