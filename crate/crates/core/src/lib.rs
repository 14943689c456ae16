//! Hankel determinants of Catalan convolution powers through quadratic
//! continued-fraction transformations, with exact oracles and guessing tools.

pub mod algebra;
pub mod bench;
pub mod cf;
pub mod error;
pub mod genfunc;
pub mod guess;
pub mod identities;
pub mod oracle;
pub mod range;

pub use error::{Error, Result};
