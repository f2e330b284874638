//! Exact scalar arithmetic.

pub mod arith;
pub mod bernoulli;
pub mod character;
pub mod interval;
pub mod ratio_str;
pub mod surd;

pub use arith::{rho, sigma0, squarefree_part};
pub use bernoulli::{bernoulli, bernoulli_poly};
pub use character::{gen_bernoulli, kronecker, CharacterSpec};
pub use interval::{stirling_bounds_hold, Interval};
pub use surd::QuadSurd;
