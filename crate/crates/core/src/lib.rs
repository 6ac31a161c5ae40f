//! Homological invariants of finite-dimensional quiver algebras with relations.
//!
//! Everything is computed over the rationals with exact arithmetic.

pub mod cli;
pub mod coxeter;
pub mod error;
pub mod format;
pub mod homology;
pub mod liecoh;
pub mod linalg;
pub mod pathalg;
pub mod presets;
pub mod random;
pub mod repcat;
pub mod serre;

pub use error::{Error, Result};
