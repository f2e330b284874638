//! The obstruction inequalities.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::bernoulli::bernoulli;
use crate::hmvol::{
    b_minus2, b_minus2_exact, b_minus2d, e_w, growth_factor, BoundMode, ObstructionGrowth,
};
use crate::{Rational, Surd};

/// `B_{4m+2}/(4m+2) > (1 + 1/(4m-10))^(8m+2) - 1`.
pub fn bii_holds(m: u32) -> Result<bool> {
    let (lhs, rhs) = bii_sides(m)?;
    Ok(lhs > rhs)
}

/// Both sides of the unimodular inequality.
pub fn bii_sides(m: u32) -> Result<(Rational, Rational)> {
    let w = 4 * m as i64 - 10;
    if w < 2 {
        return Err(Error::WOutOfRange(w));
    }
    let top = 4 * m as usize + 2;
    let lhs = bernoulli(top) / Rational::from_integer((top as i64).into());
    let rhs = e_w(w as u64, 8 * m + 2) - Rational::one();
    Ok((lhs, rhs))
}

/// `|B_{4m+2} / B_{8m+4}|`.
pub fn bernoulli_ratio(m: u32) -> Rational {
    (bernoulli(4 * m as usize + 2) / bernoulli(8 * m as usize + 4)).abs()
}

/// `beta^(w)_{m,d} = |B_{4m+2}/B_{8m+4}| G (b_(-2) + b_(-2d))`, where `G` is
/// the growth factor. For `d = 1` there is no `(-2d)` term.
pub fn beta(m: u32, d: u64, w: u64, mode: BoundMode, growth: ObstructionGrowth) -> Result<Surd> {
    if m == 0 {
        return Err(Error::DimensionTooSmall(3));
    }
    if d == 0 {
        return Err(Error::UnsupportedIndex(0));
    }
    if w == 0 || w > 8 * m as u64 + 3 {
        return Err(Error::WOutOfRange(w as i64));
    }
    let scale = bernoulli_ratio(m) * growth_factor(w, 8 * m + 3, growth);
    let b2 = match mode {
        BoundMode::Bound => Surd::rational(b_minus2(m)),
        BoundMode::Exact => b_minus2_exact(m, d)?,
    };
    let total = if d >= 2 {
        b2.checked_add(&b_minus2d(m, d)?)?
    } else {
        b2
    };
    Ok(total.scale(&scale))
}

/// `beta < sqrt(d)`, decided exactly.
pub fn beta_predicate(
    m: u32,
    d: u64,
    w: u64,
    mode: BoundMode,
    growth: ObstructionGrowth,
) -> Result<bool> {
    let b = beta(m, d, w, mode, growth)?;
    Ok(surd_below_sqrt(&b, d))
}

/// `x < sqrt(d)` for a surd whose radicand divides into `d`'s square-free part.
pub fn surd_below_sqrt(x: &Surd, d: u64) -> bool {
    let root = Surd::sqrt_of(d);
    let diff = x.checked_sub(&root).expect("surd lives in Q(sqrt d)");
    diff.signum() == Ordering::Less
}

/// Splits a Bound beta into `r1 + r2 / sqrt(d)`.
pub fn beta_parts(
    m: u32,
    d: u64,
    w: u64,
    growth: ObstructionGrowth,
) -> Result<(Rational, Rational)> {
    let scale = bernoulli_ratio(m) * growth_factor(w, 8 * m + 3, growth);
    let r1 = &scale * b_minus2(m);
    let r2 = if d >= 2 {
        &scale * crate::hmvol::b_minus2d_root_free(m, d)
    } else {
        Rational::zero()
    };
    Ok((r1, r2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::interval::{bits_for_digits, Interval};
    use crate::Scalar;

    const PB: BoundMode = BoundMode::Bound;
    const EL: ObstructionGrowth = ObstructionGrowth::ExactLeading;

    /// `r1 + r2/sqrt(d) < sqrt(d)` iff `d - r2 > 0` and `r1^2 d < (d - r2)^2`.
    fn oracle(m: u32, d: u64, w: u64, growth: ObstructionGrowth) -> bool {
        let (r1, r2) = beta_parts(m, d, w, growth).unwrap();
        let dq = Rational::from_i64(d as i64);
        let gap = &dq - &r2;
        gap.is_positive() && &r1 * &r1 * &dq < &gap * &gap
    }

    #[test]
    fn bii_examples() {
        assert_eq!(bii_holds(5), Ok(true));
        assert_eq!(bii_holds(4), Ok(false));
        assert_eq!(bii_holds(3), Ok(false));
        assert_eq!(bii_holds(2), Err(Error::WOutOfRange(-2)));
        let (lhs, _) = bii_sides(4).unwrap();
        assert_eq!(lhs, Rational::ratio(43867, 14364));
        for m in 5..=20 {
            assert_eq!(bii_holds(m), Ok(true), "m = {m}");
        }
    }

    #[test]
    fn beta_examples() {
        for growth in [EL, ObstructionGrowth::Printed] {
            assert!(beta(5, 1, 13, PB, growth).unwrap().to_f64() < 1.0);
            assert_eq!(beta_predicate(5, 1, 13, PB, growth), Ok(true));
            assert_eq!(beta_predicate(3, 100, 13, PB, growth), Ok(false));
        }
        // m = 1, d = 4, w = 5 with the printed growth E_w
        let b = beta(1, 4, 5, PB, ObstructionGrowth::Printed).unwrap();
        let r1 = Rational::ratio(65, 691) * e_w(5, 11) * Rational::from_i64(2047);
        let r2 = Rational::ratio(65, 691) * e_w(5, 11) * Rational::ratio(65, 32);
        assert_eq!(b, Surd::rational(r1 + r2));
        assert!(beta(3, 100, 13, PB, EL).unwrap().to_f64() > 10.0);
    }

    #[test]
    fn k3_m4_d3_needs_exact_leading_growth() {
        assert_eq!(beta_predicate(4, 3, 13, PB, EL), Ok(true));
        assert_eq!(
            beta_predicate(4, 3, 13, PB, ObstructionGrowth::Printed),
            Ok(false)
        );
        assert_eq!(beta_predicate(4, 4, 12, PB, EL), Ok(false));
    }

    #[test]
    fn predicate_matches_rational_oracle() {
        for m in 1..=5u32 {
            for d in (1..400u64).chain([1345, 1346, 1347, 230999, 231000]) {
                for w in [2u64, 5, 9, 13, 4 * m as u64 + 1]
                    .into_iter()
                    .filter(|&w| w < 8 * m as u64 + 3)
                {
                    for growth in [EL, ObstructionGrowth::Printed] {
                        assert_eq!(
                            beta_predicate(m, d, w, PB, growth).unwrap(),
                            oracle(m, d, w, growth),
                            "{m} {d} {w}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn beta_non_increasing_in_w() {
        for m in 1..=4u32 {
            for d in [1u64, 2, 7, 50] {
                let vals: Vec<Surd> = (2..=4 * m as u64 + 1)
                    .map(|w| beta(m, d, w, PB, EL).unwrap())
                    .collect();
                for pair in vals.windows(2) {
                    assert!(pair[1].checked_sub(&pair[0]).unwrap().signum().is_le());
                }
            }
        }
    }

    #[test]
    fn agrees_with_interval_evaluation() {
        let prec = bits_for_digits(100);
        for (m, d, w) in [
            (1u32, 4u64, 5u64),
            (2, 7, 9),
            (3, 1346, 13),
            (4, 3, 13),
            (3, 1345, 13),
        ] {
            let b = beta(m, d, w, PB, EL).unwrap();
            let bi = Interval::from_surd(&b, prec);
            let root = Interval::from_int(d as i64).sqrt(prec).unwrap();
            let less = bi.compare(&root) == Some(Ordering::Less);
            assert_eq!(less, beta_predicate(m, d, w, PB, EL).unwrap());
        }
    }

    #[test]
    fn monotone_transfer() {
        for m in 1..=3u32 {
            let w = 4 * m as u64 + 1;
            let preds: Vec<bool> = (2..=3000u64)
                .map(|d| beta_predicate(m, d, w, PB, EL).unwrap())
                .collect();
            let b2d: Vec<f64> = (2..=3000u64)
                .map(|d| crate::hmvol::b_minus2d(m, d).unwrap().to_f64())
                .collect();
            for i in (0..preds.len()).filter(|&i| preds[i]) {
                for j in i + 1..preds.len() {
                    if b2d[j] <= b2d[i] {
                        assert!(
                            preds[j],
                            "m = {m}: d = {} holds but d' = {} fails",
                            i + 2,
                            j + 2
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn exact_mode_is_sharper() {
        for (m, d) in [(3u32, 1200u64), (4, 3), (2, 150_000)] {
            let w = if m == 4 { 13 } else { 4 * m as u64 + 1 };
            let pb = beta(m, d, w, PB, EL).unwrap().to_f64();
            let ex = beta(m, d, w, BoundMode::Exact, EL).unwrap().to_f64();
            assert!(ex < pb, "m = {m}, d = {d}");
        }
    }
}
