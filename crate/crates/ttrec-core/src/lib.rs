//! Exact engine for rational Lax pairs: spectral-curve geometry, determinantal
//! correlators, and genus-0 topological recursion over ℚ.
#![no_std]
#![allow(clippy::needless_range_loop, clippy::too_many_arguments)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod correlators;
pub mod curve;
pub mod error;
pub mod laxpair;
pub mod numeric;
pub mod presets;
pub mod toprec;

pub use error::{Error, Result};
