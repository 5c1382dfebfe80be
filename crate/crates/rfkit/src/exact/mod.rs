//! Exact scalar arithmetic.
//!
//! Three value kinds cover every number in this crate:
//!
//! - [`Rat`]: arbitrary-precision rationals (re-exported `BigRational`),
//! - [`Quad`]: elements `r + c·√D` of a real quadratic extension `Q(√D)`,
//!   with exact sign decisions,
//! - [`RatInterval`]: closed intervals with rational endpoints, used to
//!   enclose values that mix incompatible square roots.

mod interval;
mod quad;
mod rat;

pub use interval::{sqrt_enclosure, RatInterval};
pub use quad::Quad;
pub use rat::{
    ceil_int, decimal_string, floor_int, format_rat, parse_rat, rat, rat_int, sqrt_exact, Rat,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("discriminant must be non-negative, got {0}")]
    InvalidDiscriminant(String),
    #[error("values live in incompatible quadratic fields (discriminants {0} and {1})")]
    IncompatibleField(String, String),
    #[error("cannot parse rational from {0:?}")]
    ParseRat(String),
}
