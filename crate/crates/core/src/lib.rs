//! Exact computations with the ideals of relations among the odd minors of
//! a 5×6 matrix, their t-adic toric degenerations, and the polytope of the
//! grading.

pub mod error;
pub mod exactnum;
pub mod gradedkernel;
pub mod linalg;
pub mod multipoly;
pub mod polytope;
pub mod presets;
pub mod text;

pub use error::{Error, Result};
