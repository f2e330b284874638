//! Verdicts on the Kodaira dimension of the three series, built from the
//! obstruction inequalities, low-weight cusp forms and known theorems.

mod beta;
mod scan;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hmvol::{BoundMode, ObstructionGrowth};
use crate::jacobi::cusp_weight_menu;
use crate::{Rational, Series, Surd};

pub use beta::{
    bernoulli_ratio, beta, beta_parts, beta_predicate, bii_holds, bii_sides, surd_below_sqrt,
};
pub use scan::{
    closing_display_threshold, quoted_constant, scan_threshold, ClosingVariant, ScanOptions,
    ScanReport, WPolicy,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeriesPoint {
    pub series: Series,
    pub m: u32,
    /// Ignored for the unimodular series.
    pub d: u64,
}

impl SeriesPoint {
    pub fn new(series: Series, m: u32, d: u64) -> Self {
        let d = if series == Series::Unimodular { 0 } else { d };
        Self { series, m, d }
    }

    /// Dimension of the modular variety.
    pub fn dimension(&self) -> u64 {
        match self.series {
            Series::Unimodular => 8 * self.m as u64 + 2,
            Series::K3 | Series::Spin => 8 * self.m as u64 + 3,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.series {
            Series::Unimodular => {}
            Series::K3 if self.d == 0 => return Err(Error::UnsupportedIndex(0)),
            Series::Spin if self.d < 2 => {
                return Err(Error::InvalidPoint("the spin cover needs d > 1".into()))
            }
            _ => {}
        }
        if self.dimension() < 9 {
            return Err(Error::DimensionTooSmall(self.dimension()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    GeneralType,
    NonNegativeKodaira,
    KodairaMinusInfinity,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Decided by an inequality evaluated here.
    Inequality,
    /// Quoted theorem.
    Theorem,
    /// Quoted result from a remark (a different method).
    Remark,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// Weight of the cusp form used.
    pub a: u64,
    /// `dim - a`.
    pub w: u64,
    /// Left-hand side of the inequality; absent when no inequality is needed.
    pub beta: Option<Surd>,
    /// Right-hand side (`sqrt d`, or `1` for the unimodular ratio).
    pub threshold: Option<Surd>,
    pub predicate: bool,
    pub mode: BoundMode,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub series: Series,
    pub m: u32,
    pub d: u64,
    pub status: Status,
    pub source: Source,
    pub witness: Option<Witness>,
    pub citations: Vec<String>,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VerdictConfig {
    pub mode: BoundMode,
    pub growth: ObstructionGrowth,
}

const CITE_INEQUALITY: &str =
    "low-weight cusp form trick: obstruction constant positive when beta < sqrt(d)";
const CITE_BII: &str =
    "unimodular obstruction inequality B_{4m+2}/(4m+2) > (1+1/(4m-10))^(8m+2) - 1";
const CITE_BORCHERDS: &str =
    "Borcherds products of weights 252 and 127 (m = 1, 2); rational quotient for m = 0";
const CITE_ODD: &str = "odd-weight cusp forms vanish on the branch divisor of the spin cover";
const CITE_SPIN_M2: &str =
    "spin cover with m = 2 is of general type for d >= 3 (pull-backs of the Borcherds form)";
const CITE_FREITAG: &str =
    "Freitag criterion: a cusp form of weight equal to the dimension gives a canonical form";
const CITE_PULLBACK: &str =
    "pull-backs of the Borcherds form Phi_12: general type for d > 61 or d in {46, 50, 54, 57, 58, 60}";

/// Indices below 62 for which `m = 2` is known to be of general type.
const M2_SPORADIC: [u64; 6] = [46, 50, 54, 57, 58, 60];

fn verdict_of(pt: &SeriesPoint, status: Status, source: Source) -> Verdict {
    Verdict {
        series: pt.series,
        m: pt.m,
        d: pt.d,
        status,
        source,
        witness: None,
        citations: Vec::new(),
        reason: None,
    }
}

fn inconclusive(pt: &SeriesPoint, reason: impl Into<String>) -> Verdict {
    let mut v = verdict_of(pt, Status::Inconclusive, Source::Inequality);
    v.reason = Some(reason.into());
    v
}

pub fn verdict(pt: SeriesPoint, config: VerdictConfig) -> Result<Verdict> {
    let pt = SeriesPoint::new(pt.series, pt.m, pt.d);
    if pt.series == Series::Unimodular && pt.m <= 2 {
        let mut v = verdict_of(&pt, Status::KodairaMinusInfinity, Source::Theorem);
        v.citations.push(CITE_BORCHERDS.into());
        return Ok(v);
    }
    match pt.validate() {
        Err(Error::DimensionTooSmall(n)) => {
            return Ok(inconclusive(
                &pt,
                format!("dimension {n} is below 9, no toroidal compactification argument"),
            ))
        }
        other => other?,
    }
    match pt.series {
        Series::Unimodular => unimodular(&pt, config),
        Series::K3 => k3(&pt, config),
        Series::Spin => spin(&pt, config),
    }
}

fn unimodular(pt: &SeriesPoint, config: VerdictConfig) -> Result<Verdict> {
    let (lhs, rhs) = bii_sides(pt.m)?;
    let holds = lhs > rhs;
    let ratio = &rhs / &lhs;
    let witness = Witness {
        a: 12 + 4 * pt.m as u64,
        w: 4 * pt.m as u64 - 10,
        beta: Some(Surd::rational(ratio)),
        threshold: Some(Surd::rational(Rational::from_integer(1.into()))),
        predicate: holds,
        mode: config.mode,
    };
    let mut v = if holds {
        verdict_of(pt, Status::GeneralType, Source::Inequality)
    } else {
        let mut v = inconclusive(pt, "the unimodular obstruction inequality fails");
        v.source = Source::Inequality;
        v
    };
    v.witness = Some(witness);
    v.citations.push(CITE_BII.into());
    Ok(v)
}

fn k3(pt: &SeriesPoint, config: VerdictConfig) -> Result<Verdict> {
    let n = pt.dimension();
    let menu = cusp_weight_menu(Series::K3, pt.m, pt.d);
    let mut last = None;
    for a in menu.existing().into_iter().filter(|&a| a < n) {
        let w = n - a;
        let b = beta(pt.m, pt.d, w, config.mode, config.growth)?;
        let ok = surd_below_sqrt(&b, pt.d);
        let witness = Witness {
            a,
            w,
            beta: Some(b),
            threshold: Some(Surd::sqrt_of(pt.d)),
            predicate: ok,
            mode: config.mode,
        };
        if ok {
            let mut v = verdict_of(pt, Status::GeneralType, Source::Inequality);
            v.witness = Some(witness);
            v.citations.push(CITE_INEQUALITY.into());
            return Ok(v);
        }
        last = Some(witness);
    }
    if pt.m == 2 && (pt.d > 61 || M2_SPORADIC.contains(&pt.d)) {
        let mut v = verdict_of(pt, Status::GeneralType, Source::Remark);
        v.witness = last;
        v.citations.push(CITE_PULLBACK.into());
        return Ok(v);
    }
    let mut v = inconclusive(
        pt,
        if last.is_some() {
            "beta >= sqrt(d) for every available cusp weight"
        } else {
            "no cusp form of weight below the dimension is known"
        },
    );
    v.witness = last;
    v.citations.push(CITE_INEQUALITY.into());
    Ok(v)
}

fn spin(pt: &SeriesPoint, config: VerdictConfig) -> Result<Verdict> {
    let n = pt.dimension();
    let menu = cusp_weight_menu(Series::Spin, pt.m, pt.d);
    if let Some(a) = menu.existing().into_iter().find(|&a| a % 2 == 1 && a < n) {
        let mut v = verdict_of(pt, Status::GeneralType, Source::Theorem);
        v.witness = Some(Witness {
            a,
            w: n - a,
            beta: None,
            threshold: None,
            predicate: true,
            mode: config.mode,
        });
        v.citations.push(CITE_ODD.into());
        return Ok(v);
    }
    if pt.m == 2 && pt.d >= 3 {
        let mut v = verdict_of(pt, Status::GeneralType, Source::Theorem);
        v.citations.push(CITE_SPIN_M2.into());
        return Ok(v);
    }
    // only the two cases with weight 11 = dimension 11 are claimed
    if pt.m == 1 && menu.has(n) {
        let mut v = verdict_of(pt, Status::NonNegativeKodaira, Source::Theorem);
        v.witness = Some(Witness {
            a: n,
            w: 0,
            beta: None,
            threshold: None,
            predicate: true,
            mode: config.mode,
        });
        v.citations.push(CITE_FREITAG.into());
        return Ok(v);
    }
    Ok(inconclusive(
        pt,
        "no odd-weight cusp form of weight at most the dimension is known",
    ))
}
