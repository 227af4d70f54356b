//! Exact computations with finite-dimensional Hopf algebras, their
//! anti-Yetter-Drinfeld contramodules, the Hopf-cyclic (co)cyclic modules with
//! contramodule coefficients, and the associated hom-connections.

pub mod ayd;
pub mod cyclic;
pub mod error;
pub mod field;
pub mod homconn;
pub mod hopf;
pub mod linalg;
pub mod matrix;
pub mod reps;
pub mod report;
pub mod session;
pub mod tasks;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
pub use report::Report;
