//! Kronecker symbols, quadratic characters and generalised Bernoulli numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::arith::squarefree_decomposition;
use super::bernoulli::bernoulli_upto;
use crate::error::{Error, Result};
use crate::Rational;

/// `(a/2)`, read off from `a mod 8`.
fn kronecker_two(a: i64) -> i8 {
    match a.rem_euclid(8) {
        1 | 7 => 1,
        3 | 5 => -1,
        _ => 0,
    }
}

/// The Kronecker symbol `(a/n)`.
pub fn kronecker(a: i64, n: i64) -> i8 {
    if n == 0 {
        return if a.abs() == 1 { 1 } else { 0 };
    }
    let mut k: i8 = 1;
    let mut b = n;
    if b < 0 {
        b = -b;
        if a < 0 {
            k = -k;
        }
    }
    let v = b.trailing_zeros();
    if v > 0 {
        let t = kronecker_two(a);
        if t == 0 {
            return 0;
        }
        if v % 2 == 1 {
            k *= t;
        }
        b >>= v;
    }
    // Jacobi symbol (a mod b / b) for odd positive b
    let mut a = a.rem_euclid(b);
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 && matches!(b & 7, 3 | 5) {
            k = -k;
        }
        if a & b & 2 != 0 {
            k = -k;
        }
        std::mem::swap(&mut a, &mut b);
        a %= b;
    }
    if b == 1 {
        k
    } else {
        0
    }
}

/// Dirichlet character given by a modulus and a rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CharacterSpec {
    /// `a -> (4d/a)`, modulus `4d`.
    KroneckerOf4d { d: u64 },
    /// `a -> (D/a)` for a discriminant `D`, modulus `|D|`.
    KroneckerOfD { disc: i64 },
    /// 1 on units mod `modulus`, 0 elsewhere.
    Principal { modulus: u64 },
}

impl CharacterSpec {
    /// `(D/.)` is only periodic mod `|D|` when `D = 0, 1 mod 4`.
    pub fn kronecker_of(disc: i64) -> Result<Self> {
        if disc == 0 || !matches!(disc.rem_euclid(4), 0 | 1) {
            return Err(Error::InvalidPoint(format!("{disc} is not a discriminant")));
        }
        Ok(Self::KroneckerOfD { disc })
    }

    pub fn modulus(&self) -> u64 {
        match *self {
            Self::KroneckerOf4d { d } => 4 * d,
            Self::KroneckerOfD { disc } => disc.unsigned_abs(),
            Self::Principal { modulus } => modulus,
        }
    }

    pub fn value(&self, a: i64) -> i8 {
        match *self {
            Self::KroneckerOf4d { d } => kronecker(4 * d as i64, a),
            Self::KroneckerOfD { disc } => kronecker(disc, a),
            Self::Principal { modulus } => {
                if num_integer::gcd(a.rem_euclid(modulus as i64), modulus as i64) == 1 {
                    1
                } else {
                    0
                }
            }
        }
    }
}

/// Generalised Bernoulli number `B_{n,chi} = f^(n-1) sum_{a=1..f} chi(a) B_n(a/f)`,
/// summed over the stated modulus `f` without any primitivity reduction.
///
/// Evaluated through the integer power sums `S_j = sum chi(a) a^j`:
/// `B_{n,chi} = sum_k C(n,k) B_k f^(k-1) S_(n-k)`.
pub fn gen_bernoulli(n: usize, chi: &CharacterSpec) -> Rational {
    assert!(n >= 1, "gen_bernoulli expects n >= 1");
    let f = chi.modulus();
    let mut sums = vec![BigInt::zero(); n + 1];
    for a in 1..=f {
        let c = chi.value(a as i64);
        if c == 0 {
            continue;
        }
        let base = BigInt::from(a);
        let mut pw = BigInt::one();
        for s in sums.iter_mut() {
            if c > 0 {
                *s += &pw;
            } else {
                *s -= &pw;
            }
            pw *= &base;
        }
    }
    let bs = bernoulli_upto(n);
    let fq = Rational::from_integer(BigInt::from(f));
    let mut f_pow = Rational::one() / &fq; // f^(k-1) at k = 0
    let mut binom = BigInt::one();
    let mut acc = Rational::zero();
    for k in 0..=n {
        if !bs[k].is_zero() {
            acc += &bs[k] * Rational::from_integer(&binom * &sums[n - k]) * &f_pow;
        }
        f_pow *= &fq;
        binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    acc
}

/// Splits a discriminant `D = D0 * c^2` with `D0` fundamental. Returns `(D0, c)`.
pub fn fundamental_discriminant(disc: i64) -> Result<(i64, u64)> {
    if disc == 0 || !matches!(disc.rem_euclid(4), 0 | 1) {
        return Err(Error::InvalidPoint(format!("{disc} is not a discriminant")));
    }
    let (s, c) = squarefree_decomposition(disc.unsigned_abs());
    let s = if disc < 0 { -(s as i64) } else { s as i64 };
    if s.rem_euclid(4) == 1 {
        Ok((s, c))
    } else {
        // D = 4 s (c/2)^2 with s = 2, 3 mod 4; c is even here
        Ok((4 * s, c / 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::bernoulli::{bernoulli, bernoulli_poly};
    use crate::Scalar;

    fn primes_below(n: i64) -> Vec<i64> {
        (2..n)
            .filter(|&p| (2..p).take_while(|k| k * k <= p).all(|k| p % k != 0))
            .collect()
    }

    #[test]
    fn spec_examples() {
        for n in 1..50 {
            assert_eq!(kronecker(1, n), 1);
        }
        assert_eq!(kronecker(2, 7), 1);
        assert_eq!(kronecker(3, 5), -1);
    }

    #[test]
    fn legendre_matches_square_tables() {
        for p in primes_below(200).into_iter().filter(|&p| p > 2) {
            let squares: Vec<bool> = {
                let mut t = vec![false; p as usize];
                for x in 1..p {
                    t[(x * x % p) as usize] = true;
                }
                t
            };
            for a in -300..300i64 {
                let r = a.rem_euclid(p);
                let expected = if r == 0 {
                    0
                } else if squares[r as usize] {
                    1
                } else {
                    -1
                };
                assert_eq!(kronecker(a, p), expected, "({a}/{p})");
            }
        }
    }

    #[test]
    fn multiplicative_in_both_arguments() {
        for a in -40..40i64 {
            for b in -40..40i64 {
                for n in 1..40i64 {
                    assert_eq!(kronecker(a * b, n), kronecker(a, n) * kronecker(b, n));
                    assert_eq!(
                        kronecker(a, n * b.max(1)),
                        kronecker(a, n) * kronecker(a, b.max(1))
                    );
                }
            }
        }
    }

    #[test]
    fn two_and_negative_conventions() {
        assert_eq!(kronecker(7, 2), 1);
        assert_eq!(kronecker(5, 2), -1);
        assert_eq!(kronecker(-1, -1), -1);
        assert_eq!(kronecker(3, -1), 1);
        assert_eq!(kronecker(4, 0), 0);
        assert_eq!(kronecker(-1, 0), 1);
    }

    fn gen_bernoulli_direct(n: usize, chi: &CharacterSpec) -> Rational {
        let f = chi.modulus() as i64;
        let sum = (1..=f)
            .map(|a| {
                Rational::from_i64(chi.value(a) as i64) * bernoulli_poly(n, &Rational::ratio(a, f))
            })
            .fold(Rational::zero(), |x, y| x + y);
        Rational::from_i64(f).powu(n as u64 - 1) * sum
    }

    #[test]
    fn gen_bernoulli_examples() {
        assert_eq!(
            gen_bernoulli(2, &CharacterSpec::Principal { modulus: 1 }),
            bernoulli(2)
        );
        let chi_m4 = CharacterSpec::kronecker_of(-4).unwrap();
        assert_eq!(gen_bernoulli(1, &chi_m4), Rational::ratio(-1, 2));
        // chi_8 = (8/.): B_{2,chi_8} = 2, consistent with L(2, chi_8) = pi^2 / (8 sqrt 2)
        assert_eq!(
            gen_bernoulli(2, &CharacterSpec::KroneckerOf4d { d: 2 }),
            Rational::ratio(2, 1)
        );
    }

    #[test]
    fn power_sum_route_matches_definition() {
        let chars = [
            CharacterSpec::KroneckerOf4d { d: 3 },
            CharacterSpec::KroneckerOf4d { d: 5 },
            CharacterSpec::kronecker_of(5).unwrap(),
            CharacterSpec::kronecker_of(-3).unwrap(),
            CharacterSpec::kronecker_of(13).unwrap(),
            CharacterSpec::Principal { modulus: 12 },
        ];
        for chi in &chars {
            for n in 1..=10 {
                assert_eq!(
                    gen_bernoulli(n, chi),
                    gen_bernoulli_direct(n, chi),
                    "{chi:?} n={n}"
                );
            }
        }
    }

    #[test]
    fn fundamental_parts() {
        assert_eq!(fundamental_discriminant(12).unwrap(), (12, 1));
        assert_eq!(fundamental_discriminant(20).unwrap(), (5, 2));
        assert_eq!(fundamental_discriminant(36).unwrap(), (1, 6));
        assert_eq!(fundamental_discriminant(-16).unwrap(), (-4, 2));
        assert_eq!(fundamental_discriminant(8).unwrap(), (8, 1));
        assert_eq!(fundamental_discriminant(32).unwrap(), (8, 2));
        assert!(fundamental_discriminant(7).is_err());
    }
}
