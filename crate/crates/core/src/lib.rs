//! Signatures of surface bundles and Lefschetz fibrations from
//! monodromy data.
//!
//! The library evaluates monodromy words into Sp(2h, Z), computes the
//! Meyer cocycle by exact rational linear algebra, assembles signatures
//! of fibrations over closed and holed base surfaces, implements the
//! subtraction and fiber-sum calculus on fibrations, and derives
//! certified base-genus bounds from the resulting bundle certificates.
//!
//! All arithmetic is exact: `BigInt` matrices for the group work,
//! `BigRational` for the cocycle kernels. There are no floating-point
//! code paths and no tolerances.

pub mod atlas;
pub mod bounds;
pub mod error;
pub mod fibration;
pub mod mat;
pub mod meyer;
pub mod pipeline;
pub mod reproduce;
pub mod sympl;
pub mod words;

pub use error::{Error, Result};

/// Integer matrix used for Sp(2h, Z) elements.
pub type IntMat = mat::Mat<num_bigint::BigInt>;
/// Exact rational matrix used for kernel and Gram computations.
pub type RatMat = mat::Mat<num_rational::BigRational>;
