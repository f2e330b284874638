use clap::{Args, Parser, Subcommand, ValueEnum};

use orthokod_core::hmvol::{BoundMode, ObstructionGrowth};
use orthokod_core::verdict::ClosingVariant;
use orthokod_core::Series;

/// Largest index accepted by any command.
pub const MAX_D: u64 = 100_000_000;
/// Largest `m` accepted by any command.
pub const MAX_M: u32 = 32;

#[derive(Debug, Parser)]
#[command(
    name = "orthokod",
    version,
    about = "Kodaira dimension verdicts for orthogonal modular varieties"
)]
pub struct Cli {
    /// Machine-readable single-line JSON on stdout.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// CSV on stdout.
    #[arg(long, global = true)]
    pub csv: bool,
    /// How the obstruction spaces are bounded.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Bound)]
    pub mode: ModeArg,
    /// Growth factor of the obstruction spaces.
    #[arg(long, global = true, value_enum, default_value_t = GrowthArg::ExactLeading)]
    pub growth: GrowthArg,
    /// Cap on scan worker threads.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=1024))]
    pub threads: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Bound,
    Exact,
}

impl From<ModeArg> for BoundMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Bound => BoundMode::Bound,
            ModeArg::Exact => BoundMode::Exact,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GrowthArg {
    ExactLeading,
    Printed,
}

impl From<GrowthArg> for ObstructionGrowth {
    fn from(g: GrowthArg) -> Self {
        match g {
            GrowthArg::ExactLeading => ObstructionGrowth::ExactLeading,
            GrowthArg::Printed => ObstructionGrowth::Printed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesArg {
    Unimodular,
    K3,
    Spin,
}

impl From<SeriesArg> for Series {
    fn from(s: SeriesArg) -> Self {
        match s {
            SeriesArg::Unimodular => Series::Unimodular,
            SeriesArg::K3 => Series::K3,
            SeriesArg::Spin => Series::Spin,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClosingArg {
    Definition,
    Printed,
}

impl From<ClosingArg> for ClosingVariant {
    fn from(c: ClosingArg) -> Self {
        match c {
            ClosingArg::Definition => ClosingVariant::Definition,
            ClosingArg::Printed => ClosingVariant::Printed,
        }
    }
}

fn m_parser() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(0..=MAX_M as i64)
}

fn d_parser() -> clap::builder::RangedU64ValueParser<u64> {
    clap::value_parser!(u64).range(1..=MAX_D)
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[arg(long, value_enum)]
    pub series: SeriesArg,
    #[arg(long, value_parser = m_parser())]
    pub m: u32,
    /// Index of the polarisation; ignored for the unimodular series.
    #[arg(long, value_parser = d_parser())]
    pub d: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kodaira dimension verdict for one point of a series.
    Verdict(PointArgs),
    /// Scan `beta < sqrt(d)` over a range of indices.
    Scan {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=MAX_M as i64))]
        m: u32,
        /// Fixed `w`; the cusp form weight is `8m+3-w`.
        #[arg(long, conflicts_with = "menu", required_unless_present = "menu")]
        w: Option<u64>,
        /// Use every available cusp form weight.
        #[arg(long)]
        menu: bool,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=MAX_D), default_value_t = 2)]
        d_min: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=MAX_D))]
        d_max: u64,
        /// Bernoulli number in the closing display.
        #[arg(long, value_enum, default_value_t = ClosingArg::Definition)]
        closing: ClosingArg,
    },
    /// Branch divisor census of the K3 series.
    Census {
        #[arg(long, value_parser = d_parser())]
        d: u64,
        #[arg(long, value_parser = m_parser(), default_value_t = 1)]
        m: u32,
    },
    /// Dimension of Jacobi cusp forms.
    Jacobi {
        #[arg(long, value_parser = clap::value_parser!(i64).range(2..=10_000))]
        k: i64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=1_000_000))]
        index: u64,
    },
    /// Bernoulli numbers.
    Bernoulli {
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=4000))]
        n: u64,
        /// List `B_0` up to `B_n`.
        #[arg(long)]
        upto: bool,
    },
    /// Leading term of the dimension of modular forms of weight `k`.
    Hmdim {
        #[arg(long, value_enum)]
        series: SeriesArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=MAX_M as i64))]
        m: u32,
        #[arg(long, value_parser = d_parser())]
        d: Option<u64>,
    },
    /// Every exact quantity entering `beta`.
    Ingredients {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=MAX_M as i64))]
        m: u32,
        #[arg(long, value_parser = d_parser())]
        d: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=1000))]
        w: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=1_000_000), default_value_t = 1)]
        k1: u64,
    },
}
