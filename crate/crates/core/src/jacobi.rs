//! Dimensions of elliptic and Jacobi cusp forms, and the menu of weights
//! for which orthogonal cusp forms are known to exist.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::arith::sigma0;
use crate::Series;

/// `floor(l/12)`, minus one when `l = 2 mod 12`.
pub fn braces12(l: u64) -> i64 {
    let q = (l / 12) as i64;
    if l % 12 == 2 {
        q - 1
    } else {
        q
    }
}

/// `dim S_k(SL_2(Z))`.
pub fn dim_cusp_sl2(k: i64) -> u64 {
    if k < 12 || k % 2 != 0 {
        0
    } else {
        braces12(k as u64) as u64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiCuspDim {
    pub dim: u64,
    /// Value of the summation before clamping at zero.
    pub raw: i64,
    pub clamped: bool,
}

/// Raw summation formula for `dim J_{k,d}^cusp`, before clamping.
pub fn jacobi_cusp_raw(k: i64, d: u64) -> Result<i64> {
    if k < 2 {
        return Err(Error::UnsupportedWeight(k));
    }
    if d == 0 {
        return Err(Error::UnsupportedIndex(d));
    }
    let four_d = 4 * d as u128;
    let floor_sq = |j: u64| ((j as u128 * j as u128) / four_d) as i64;
    let k = k as u64;
    let raw = if k % 2 == 0 {
        let s: i64 = (0..=d).map(|j| braces12(k + 2 * j) - floor_sq(j)).sum();
        if k == 2 {
            s + (sigma0(d) as i64 + 1) / 2
        } else {
            s
        }
    } else {
        (1..d).map(|j| braces12(k - 1 + 2 * j) - floor_sq(j)).sum()
    };
    Ok(raw)
}

pub fn dim_jacobi_cusp_detailed(k: i64, d: u64) -> Result<JacobiCuspDim> {
    let raw = jacobi_cusp_raw(k, d)?;
    Ok(JacobiCuspDim {
        dim: raw.max(0) as u64,
        raw,
        clamped: raw < 0,
    })
}

/// `dim J_{k,d}^cusp`, clamped at zero.
pub fn dim_jacobi_cusp(k: i64, d: u64) -> Result<u64> {
    Ok(dim_jacobi_cusp_detailed(k, d)?.dim)
}

/// Every index `d <= limit` with a non-zero Jacobi cusp form of weight 2.
pub fn weight_two_indices(limit: u64) -> Vec<u64> {
    (1..=limit)
        .filter(|&d| dim_jacobi_cusp(2, d).map_or(false, |n| n > 0))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightOption {
    /// Weight of the orthogonal cusp form.
    pub weight: u64,
    /// Jacobi weight it is lifted from (`weight - 4m`); 12 for the Delta lift.
    pub jacobi_weight: u64,
    pub exists: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspWeightMenu {
    pub series: Series,
    pub m: u32,
    pub d: u64,
    pub available_weights: Vec<WeightOption>,
}

impl CuspWeightMenu {
    /// Existing weights in ascending order.
    pub fn existing(&self) -> Vec<u64> {
        let mut w: Vec<u64> = self
            .available_weights
            .iter()
            .filter(|o| o.exists)
            .map(|o| o.weight)
            .collect();
        w.sort_unstable();
        w
    }

    pub fn has(&self, weight: u64) -> bool {
        self.available_weights
            .iter()
            .any(|o| o.weight == weight && o.exists)
    }
}

/// Weights with known cusp forms, via lifts of Jacobi forms of index `d`.
pub fn cusp_weight_menu(series: Series, m: u32, d: u64) -> CuspWeightMenu {
    let shift = 4 * m as u64;
    let available_weights = match series {
        Series::Unimodular => vec![WeightOption {
            weight: 12 + shift,
            jacobi_weight: 12,
            exists: true,
        }],
        Series::K3 | Series::Spin => {
            let two = d > 180 || dim_jacobi_cusp(2, d.max(1)).map_or(false, |n| n > 0);
            [
                (11, d > 1),
                (10, d >= 1),
                (7, d >= 4),
                (6, d == 3 || d >= 5),
                (5, d == 5 || d >= 7),
                (2, two),
            ]
            .into_iter()
            .map(|(k, exists)| WeightOption {
                weight: k + shift,
                jacobi_weight: k,
                exists,
            })
            .collect()
        }
    };
    CuspWeightMenu {
        series,
        m,
        d,
        available_weights,
    }
}
