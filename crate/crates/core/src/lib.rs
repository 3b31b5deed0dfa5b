//! Exact computer algebra for colored set partitions, word Bell polynomials,
//! and the Hopf algebras built on them.

pub mod bell;
pub mod combinatorics;
pub mod error;
pub mod hopf;
pub mod lincomb;
pub mod munthekaas;
pub mod poly;
pub mod random;
pub mod realization;
pub mod report;
pub mod scalar;
pub mod symfun;
pub mod verify;
mod util;

pub use error::{Error, Result};
pub use lincomb::LinComb;
pub use scalar::{Field, Rational, Scalar};
