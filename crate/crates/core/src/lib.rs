//! Exact arithmetic for deciding whether orthogonal modular varieties of
//! unimodular type `F_II^(m)` and K3 type `F_2d^(m)` (and their spin double
//! covers `SF_2d^(m)`) are of general type.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactnum`]: rationals, quadratic surds, Bernoulli numbers, Kronecker
//!   symbols, certified intervals and elementary arithmetic functions.
//! - [`lattice`]: integer Gram matrices, discriminant groups, stably reflective
//!   vectors and the branch-divisor census.
//! - [`jacobi`]: dimensions of Jacobi cusp forms and the low-weight cusp form menu.
//! - [`hmvol`]: leading terms of dimension formulas and obstruction ingredients.
//! - [`verdict`]: the obstruction inequalities, verdicts and threshold scans.
//!
//! Formula kernels are written once over [`Scalar`]; decisions are always taken
//! on the exact instantiation [`Rational`], while `f64` is used for the
//! approximate values shown in human-readable output.

pub mod error;
pub mod exactnum;
pub mod hmvol;
pub mod jacobi;
pub mod lattice;
pub mod scalar;
pub mod series;
pub mod verdict;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use series::Series;

/// Arbitrary-precision exact fraction, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Exact quadratic surd `a + b*sqrt(s)` over [`Rational`].
pub type Surd = exactnum::QuadSurd<Rational>;

/// Floating-point surd used for approximate display only.
pub type ApproxSurd = exactnum::QuadSurd<f64>;
