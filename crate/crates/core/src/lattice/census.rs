//! Orbit counts of stably reflective vectors in `2U + mE8(-1) + <-2d>`.

use serde::{Deserialize, Serialize};

use super::reflective::ComplementLabel;
use crate::exactnum::arith::rho;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub complement: ComplementLabel,
    pub norm: i64,
    pub div: u64,
    pub orbits: u64,
    pub divisors: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchCensus {
    pub m: u32,
    pub d: u64,
    pub entries: Vec<CensusEntry>,
}

impl BranchCensus {
    pub fn get(&self, label: ComplementLabel) -> Option<&CensusEntry> {
        self.entries.iter().find(|e| e.complement == label)
    }

    pub fn total_divisors(&self) -> u64 {
        self.entries.iter().map(|e| e.divisors).sum()
    }
}

/// Orbits of `(-2d)`-vectors with `div(r) = d`.
fn div_d_orbits(d: u64) -> u64 {
    let r = rho(d);
    if d % 2 == 1 || d % 8 == 4 {
        1 << r
    } else if d % 8 == 0 {
        1 << (r + 1)
    } else {
        1 << (r - 1)
    }
}

pub fn orbit_census(m: u32, d: u64) -> BranchCensus {
    assert!(d >= 1, "census needs d >= 1");
    let mut entries = vec![CensusEntry {
        complement: ComplementLabel::K2d,
        norm: -2,
        div: 1,
        orbits: 1,
        divisors: 1,
    }];
    if d % 4 == 1 {
        entries.push(CensusEntry {
            complement: ComplementLabel::N2d,
            norm: -2,
            div: 2,
            orbits: 1,
            divisors: 1,
        });
    }
    if d > 1 {
        // +r and -r give the same divisor once d > 2
        let divisors = |orbits: u64| if d > 2 { orbits / 2 } else { orbits };
        let norm = -2 * d as i64;
        let full = 1u64 << rho(d);
        entries.push(CensusEntry {
            complement: ComplementLabel::IIUnimodular,
            norm,
            div: 2 * d,
            orbits: full,
            divisors: divisors(full),
        });
        let half = div_d_orbits(d);
        entries.push(CensusEntry {
            complement: ComplementLabel::K2OrT,
            norm,
            div: d,
            orbits: half,
            divisors: divisors(half),
        });
    }
    BranchCensus { m, d, entries }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SqrtModulus {
    /// `x mod n` with `x^2 = 1 mod n`.
    ModD,
    /// `x mod 2n` with `x^2 = 1 mod 4n`.
    Mod2dIn4d,
}

/// Brute-force count of square roots of 1.
pub fn count_sqrt1(n: u64, kind: SqrtModulus) -> u64 {
    assert!(n >= 1);
    let (range, modulus) = match kind {
        SqrtModulus::ModD => (n, n as u128),
        SqrtModulus::Mod2dIn4d => (2 * n, 4 * n as u128),
    };
    (0..range)
        .filter(|&x| (x as u128 * x as u128) % modulus == 1 % modulus)
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(c: &BranchCensus, l: ComplementLabel) -> (u64, u64) {
        let e = c.get(l).unwrap();
        (e.orbits, e.divisors)
    }

    #[test]
    fn census_examples() {
        let c = orbit_census(1, 6);
        assert_eq!(row(&c, ComplementLabel::K2d), (1, 1));
        assert!(c.get(ComplementLabel::N2d).is_none());
        assert_eq!(row(&c, ComplementLabel::IIUnimodular), (4, 2));
        assert_eq!(row(&c, ComplementLabel::K2OrT), (2, 1));

        let c = orbit_census(1, 5);
        assert_eq!(row(&c, ComplementLabel::N2d), (1, 1));
        assert_eq!(row(&c, ComplementLabel::IIUnimodular), (2, 1));
        assert_eq!(row(&c, ComplementLabel::K2OrT), (2, 1));

        assert_eq!(row(&orbit_census(1, 8), ComplementLabel::K2OrT), (4, 2));
    }

    #[test]
    fn small_d_conventions() {
        let c = orbit_census(2, 1);
        assert_eq!(c.entries.len(), 2);
        assert!(c.get(ComplementLabel::IIUnimodular).is_none());
        let c = orbit_census(2, 2);
        assert_eq!(row(&c, ComplementLabel::IIUnimodular), (2, 2));
        assert_eq!(row(&c, ComplementLabel::K2OrT), (1, 1));
    }

    #[test]
    fn sqrt_counts() {
        assert_eq!(count_sqrt1(6, SqrtModulus::ModD), 2);
        assert_eq!(count_sqrt1(8, SqrtModulus::ModD), 4);
        assert_eq!(count_sqrt1(12, SqrtModulus::ModD), 4);
        assert_eq!(count_sqrt1(1, SqrtModulus::ModD), 1);
    }

    #[test]
    fn census_matches_square_root_counts() {
        for d in 2..=2000u64 {
            let c = orbit_census(0, d);
            assert_eq!(
                c.get(ComplementLabel::IIUnimodular).unwrap().orbits,
                count_sqrt1(d, SqrtModulus::Mod2dIn4d),
                "d = {d}"
            );
            assert_eq!(
                c.get(ComplementLabel::K2OrT).unwrap().orbits,
                count_sqrt1(d, SqrtModulus::ModD),
                "d = {d}"
            );
        }
    }

    #[test]
    fn sqrt_count_is_multiplicative() {
        for a in 1..=60u64 {
            for b in 1..=(2000 / a) {
                if num_integer::gcd(a, b) == 1 {
                    assert_eq!(
                        count_sqrt1(a * b, SqrtModulus::ModD),
                        count_sqrt1(a, SqrtModulus::ModD) * count_sqrt1(b, SqrtModulus::ModD)
                    );
                }
            }
        }
    }
}
