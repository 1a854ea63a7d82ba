//! Construction and exact verification of cross Z-complementary sequence
//! sets (CZCSS) and their special cases, built from generalized Boolean
//! functions over `Z_q`.
//!
//! Correlations are evaluated in `Z[w]` with `w = exp(2 pi i / q)`, so every
//! pass/fail decision is an exact identity test rather than a floating-point
//! comparison.

pub mod cli;
pub mod constructions;
pub mod correlation;
pub mod error;
pub mod fixtures;
pub mod gbf;
pub mod io;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
