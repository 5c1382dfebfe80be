//! Exact computation and certification of symplectic embedding data for
//! four-dimensional ellipsoids into polydiscs.
//!
//! Everything is computed over arbitrary-precision rationals or a single
//! real quadratic extension of the rationals; there are no floating-point
//! decisions anywhere. The main entry points are:
//!
//! - [`weights::weight_expansion`] — continued-fraction weight expansions,
//! - [`cremona::reduce_packing`] — Cremona reduction certificates for
//!   full fillings,
//! - [`ech`] — ECH capacity sequences for ellipsoids and polydiscs,
//! - [`classes::enumerate_obstructive`] — exhaustive search for
//!   obstructive exceptional classes,
//! - [`rf`] — the rigid-flexible value `RF(b)` and its verification
//!   pipeline.

pub mod exact;
pub mod weights;

pub use exact::{Quad, Rat, RatInterval};
