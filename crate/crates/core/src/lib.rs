//! Exact verification engine for transposed Poisson algebras, Hopf algebras
//! and transposed Poisson (A,H)-Hopf modules given by structure constants.
//!
//! All arithmetic is over the rationals; every check is exact.

pub mod exactlin;
pub mod fundamental;
pub mod gallery;
pub mod hopfcore;
pub mod invariants;
mod poly;
pub mod report;
pub mod repcat;
pub mod tpalg;

pub use exactlin::{rat, ratio, Matrix, Rational, Subspace, TensorIndex, Vector};
pub use report::{Law, Report, Witness};
