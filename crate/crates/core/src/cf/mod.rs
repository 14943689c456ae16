//! Continued-fraction engine: canonical quadratic FEs, the transformation
//! between them, recorded chains, and Hankel evaluation from a chain.

mod chain;
mod fe;
pub mod json;
mod period;

pub use chain::{build_chain, default_max_steps, hankel_from_chain, hankel_sequence, Chain};
pub use fe::{canonicalize, decompose_u, shift_sign, tau, ChainStep, QuadraticFE};
pub use period::{detect_period, PeriodReport};
