//! Exact coefficient arithmetic: rationals, a prime field, dense polynomials,
//! canonical rational functions and truncated power series.

mod field;
mod linalg;
pub mod modp;
mod poly;
mod rational;
mod ratfunc;
mod series;

pub use field::Field;
pub use linalg::nullspace;
pub use modp::{Fp, FpDefault, DEFAULT_PRIME};
pub use poly::Poly;
pub use rational::{binomial, Rational};
pub use ratfunc::{poly_gcd_reduce, RationalFunction};
pub use series::{series_expand, series_order, series_reciprocal, PowerSeries};
