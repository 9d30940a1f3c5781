//! Exact and floating-point linear algebra used by the matrix engine.

pub mod exact;
pub mod field;
pub mod float;
mod gauss;
mod matrix;
pub mod sparse;

pub use gauss::GaussRat;
pub use matrix::{Mat, Scalar};
