//! Threshold scans of `beta < sqrt(d)` over ranges of `d`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::beta::{bernoulli_ratio, beta_predicate};
use super::VerdictConfig;
use crate::error::{Error, Result};
use crate::exactnum::arith::{rho, FactorSieve};
use crate::exactnum::bernoulli::bernoulli;
use crate::hmvol::{b_minus2, growth_factor, h_d, BoundMode};
use crate::jacobi::cusp_weight_menu;
use crate::{Rational, Series};

/// Which cusp weights a scan may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WPolicy {
    /// Only `w` (cusp weight `8m+3-w`).
    Fixed(u64),
    /// Any weight of the menu below the dimension.
    Menu,
}

/// Bernoulli number in the denominator of the closing display.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosingVariant {
    /// `B_{8m+4}`, as in the definition of beta.
    #[default]
    Definition,
    /// `B_{8m+2}`, as displayed in the closing inequality.
    Printed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanOptions {
    pub m: u32,
    pub policy: WPolicy,
    pub d_min: u64,
    pub d_max: u64,
    pub config: VerdictConfig,
    pub threads: Option<usize>,
    pub closing: ClosingVariant,
}

impl ScanOptions {
    pub fn new(m: u32, policy: WPolicy, d_max: u64) -> Self {
        Self {
            m,
            policy,
            d_min: 2,
            d_max,
            config: VerdictConfig::default(),
            threads: None,
            closing: ClosingVariant::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub m: u32,
    pub policy: WPolicy,
    pub d_min: u64,
    pub d_max: u64,
    pub config: VerdictConfig,
    /// Largest `d` in range where the predicate fails.
    pub last_failure_d: Option<u64>,
    /// First `d` from which the predicate holds up to `d_max`.
    pub first_stable_d: Option<u64>,
    pub failures: u64,
    /// Constant quoted in the literature for this `(m, w)`, if any.
    pub quoted_constant: Option<u64>,
    /// First `d` satisfying the single closing display.
    pub closing_display_threshold: Option<u64>,
    pub note: String,
    /// Predicate per `d`, starting at `d_min`.
    #[serde(skip)]
    pub bits: Vec<bool>,
}

impl ScanReport {
    pub fn predicate_at(&self, d: u64) -> Option<bool> {
        d.checked_sub(self.d_min)
            .and_then(|i| self.bits.get(i as usize).copied())
    }
}

/// Quoted thresholds for the weight `4m+2` argument.
pub fn quoted_constant(m: u32, w: u64) -> Option<u64> {
    match (m, w) {
        (1, 5) => Some(1_537_488),
        (2, 9) => Some(231_000),
        (3, 13) => Some(1346),
        _ => None,
    }
}

/// First `d` with `|B_{4m+2}/B| G (2^(8m+3) + 2) < sqrt(d)`.
pub fn closing_display_threshold(
    m: u32,
    w: u64,
    config: VerdictConfig,
    variant: ClosingVariant,
) -> u64 {
    let denom = match variant {
        ClosingVariant::Definition => bernoulli(8 * m as usize + 4),
        ClosingVariant::Printed => bernoulli(8 * m as usize + 2),
    };
    let x = (bernoulli(4 * m as usize + 2) / denom).abs()
        * growth_factor(w, 8 * m + 3, config.growth)
        * (Rational::two_pow(8 * m as i64 + 3) + Rational::from_integer(2.into()));
    let sq = &x * &x;
    (sq.floor().to_integer() + BigInt::one())
        .to_u64()
        .unwrap_or(u64::MAX)
}

use crate::Scalar;

/// Integer form of the Bound predicate for a fixed `w`:
/// with `r1 = p1/q1` and `r2 = N/M`, the test is `dM > N` and
/// `p1^2 d M^2 < q1^2 (dM - N)^2`.
struct FastKernel {
    m: u32,
    p: BigInt,
    q: BigInt,
    p1_sq: BigInt,
    q1_sq: BigInt,
    reject_upto: u64,
    x_h: [BigInt; 3],
}

impl FastKernel {
    fn new(m: u32, w: u64, config: VerdictConfig) -> Self {
        let scale = bernoulli_ratio(m) * growth_factor(w, 8 * m + 3, config.growth);
        let r1 = &scale * b_minus2(m);
        let r1_sq = &r1 * &r1;
        let reject_upto = r1_sq.floor().to_integer().to_u64().unwrap_or(u64::MAX);
        // 2^(8m+4) X_h for h = -1, 0, 1
        let top = BigInt::one() << (8 * m + 4);
        let mid = BigInt::one() << (4 * m + 2);
        let base = &top + &mid - 2;
        let x_h = [&base / 2 + 2, &base + 2, &base * 2 + 2];
        Self {
            m,
            p: scale.numer().clone(),
            q: scale.denom().clone(),
            p1_sq: r1_sq.numer().clone(),
            q1_sq: r1_sq.denom().clone(),
            reject_upto,
            x_h,
        }
    }

    fn holds(&self, d: u64, rho_d: u32) -> bool {
        if d <= self.reject_upto {
            // r1^2 d < (d - r2)^2 <= d^2 forces d > r1^2
            return false;
        }
        let h = h_d(d);
        let e = rho_d + 8 * self.m + 3 + (d == 2) as u32;
        let n = &self.p * &self.x_h[(h + 1) as usize] << e;
        let big_d = BigInt::from(d).pow(4 * self.m + 1);
        let mm = (&self.q * big_d) << (8 * self.m + 4);
        let dm = &mm * d;
        if dm <= n {
            return false;
        }
        let gap = &dm - &n;
        &self.p1_sq * d * &mm * &mm < &self.q1_sq * &gap * &gap
    }
}

fn weight_available(m: u32, a: u64, d: u64) -> bool {
    cusp_weight_menu(Series::K3, m, d).has(a)
}

/// Weights usable at index `d`; for `d > 180` every menu weight exists.
fn usable_ws(m: u32, d: u64, candidates: &[u64]) -> Vec<u64> {
    let n = 8 * m as u64 + 3;
    candidates
        .iter()
        .copied()
        .filter(|&w| w >= 1 && w < n && (d > 180 || weight_available(m, n - w, d)))
        .collect()
}

pub fn scan_threshold(opts: &ScanOptions) -> Result<ScanReport> {
    let m = opts.m;
    if m == 0 {
        return Err(Error::DimensionTooSmall(3));
    }
    if opts.d_max < 2 || opts.d_min < 2 || opts.d_min > opts.d_max {
        return Err(Error::InvalidPoint(format!(
            "scan range [{}, {}] is empty or below 2",
            opts.d_min, opts.d_max
        )));
    }
    let n = 8 * m as u64 + 3;
    let candidates: Vec<u64> = match opts.policy {
        WPolicy::Fixed(w) => {
            if w == 0 || w >= n {
                return Err(Error::WOutOfRange(w as i64));
            }
            vec![w]
        }
        WPolicy::Menu => {
            // larger w first: smaller growth factor
            let mut ws: Vec<u64> = cusp_weight_menu(Series::K3, m, u64::MAX)
                .available_weights
                .iter()
                .filter(|o| o.weight < n)
                .map(|o| n - o.weight)
                .collect();
            ws.sort_unstable_by(|a, b| b.cmp(a));
            ws
        }
    };
    let config = opts.config;
    let kernels: Vec<(u64, FastKernel)> = candidates
        .iter()
        .map(|&w| (w, FastKernel::new(m, w, config)))
        .collect();
    let sieve = (opts.d_max <= 50_000_000).then(|| FactorSieve::new(opts.d_max));
    let eval = |d: u64| -> Result<bool> {
        let ws = usable_ws(m, d, &candidates);
        for w in ws {
            let ok = match config.mode {
                BoundMode::Bound => {
                    let r = sieve.as_ref().map_or_else(|| rho(d), |s| s.rho(d));
                    kernels
                        .iter()
                        .find(|(kw, _)| *kw == w)
                        .expect("kernel per w")
                        .1
                        .holds(d, r)
                }
                BoundMode::Exact => beta_predicate(m, d, w, config.mode, config.growth)?,
            };
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    };
    let run = || -> Result<Vec<bool>> {
        (opts.d_min..=opts.d_max)
            .into_par_iter()
            .map(eval)
            .collect()
    };
    let bits = match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::InvalidPoint(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    let last_failure_d = bits
        .iter()
        .rposition(|&b| !b)
        .map(|i| opts.d_min + i as u64);
    let first_stable_d = match last_failure_d {
        Some(d) if d == opts.d_max => None,
        Some(d) => Some(d + 1),
        None => Some(opts.d_min),
    };
    let failures = bits.iter().filter(|&&b| !b).count() as u64;
    let (quoted, closing) = match opts.policy {
        WPolicy::Fixed(w) => (
            quoted_constant(m, w),
            Some(closing_display_threshold(m, w, config, opts.closing)),
        ),
        WPolicy::Menu => (None, None),
    };
    Ok(ScanReport {
        m,
        policy: opts.policy,
        d_min: opts.d_min,
        d_max: opts.d_max,
        config,
        last_failure_d,
        first_stable_d,
        failures,
        quoted_constant: quoted,
        closing_display_threshold: closing,
        note: format!(
            "results hold for {} <= d <= {} only; nothing is claimed beyond d_max",
            opts.d_min, opts.d_max
        ),
        bits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hmvol::ObstructionGrowth;

    #[test]
    fn kernel_matches_exact_predicate() {
        let config = VerdictConfig::default();
        for m in 1..=4u32 {
            for w in [2u64, 5, 9, 13]
                .into_iter()
                .filter(|&w| w < 8 * m as u64 + 3)
            {
                let k = FastKernel::new(m, w, config);
                let lo = k.reject_upto.saturating_sub(300).max(2);
                for d in (2..200).chain(lo..lo + 600) {
                    let exact = beta_predicate(m, d, w, config.mode, config.growth).unwrap();
                    assert_eq!(k.holds(d, rho(d)), exact, "m = {m}, w = {w}, d = {d}");
                }
            }
        }
    }

    #[test]
    fn closing_display_reproduces_quoted_constants() {
        let config = VerdictConfig::default();
        for m in 1..=3u32 {
            let w = 4 * m as u64 + 1;
            assert_eq!(
                closing_display_threshold(m, w, config, ClosingVariant::Definition),
                quoted_constant(m, w).unwrap()
            );
        }
        let printed = VerdictConfig {
            growth: ObstructionGrowth::Printed,
            ..config
        };
        assert!(closing_display_threshold(3, 13, printed, ClosingVariant::Definition) > 1346);
    }

    #[test]
    fn m3_scan_and_thread_cap() {
        let mut opts = ScanOptions::new(3, WPolicy::Fixed(13), 5000);
        let full = scan_threshold(&opts).unwrap();
        let first = full.first_stable_d.unwrap();
        assert!((1000..=2100).contains(&first), "{first}");
        assert_eq!(full.predicate_at(first), Some(true));
        assert_eq!(full.predicate_at(first - 1), Some(false));
        opts.threads = Some(1);
        let single = scan_threshold(&opts).unwrap();
        assert_eq!(single.bits, full.bits);
        assert_eq!(single.last_failure_d, full.last_failure_d);
    }

    #[test]
    fn menu_policy_is_at_least_fixed() {
        let fixed = scan_threshold(&ScanOptions::new(4, WPolicy::Fixed(13), 400)).unwrap();
        let menu = scan_threshold(&ScanOptions::new(4, WPolicy::Menu, 400)).unwrap();
        for (f, m) in fixed.bits.iter().zip(&menu.bits) {
            assert!(!f || *m);
        }
        assert_eq!(menu.predicate_at(4), Some(false));
        assert_eq!(menu.predicate_at(3), Some(true));
    }

    #[test]
    fn bad_ranges() {
        assert!(scan_threshold(&ScanOptions::new(3, WPolicy::Fixed(13), 1)).is_err());
        assert_eq!(
            scan_threshold(&ScanOptions::new(3, WPolicy::Fixed(27), 10)),
            Err(Error::WOutOfRange(27))
        );
    }
}
