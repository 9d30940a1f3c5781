//! Highest-weight calculus and tensor-square commutant tests for compact Lie algebras.

pub mod error;
pub mod par;
pub mod rootsys;

pub use error::{Error, Result};
pub mod checks;
pub mod cli;
pub mod decide;
pub mod dynkin;
pub mod linalg;
pub mod matrixrep;
pub mod repdecomp;
pub mod reptype;
