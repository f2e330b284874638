use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Family of modular varieties under study.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Series {
    /// Unimodular lattices `2U + mE8(-1)`.
    Unimodular,
    /// K3 type `2U + mE8(-1) + <-2d>`.
    K3,
    /// Spin double covers of the K3 type.
    Spin,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Series::Unimodular => "unimodular",
            Series::K3 => "k3",
            Series::Spin => "spin",
        })
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "unimodular" | "ii" => Ok(Series::Unimodular),
            "k3" => Ok(Series::K3),
            "spin" => Ok(Series::Spin),
            other => Err(Error::Parse(format!("unknown series `{other}`"))),
        }
    }
}
