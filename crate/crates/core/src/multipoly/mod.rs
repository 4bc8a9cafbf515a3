//! Polynomials over the odd-subset variables and the ring maps into
//! minors and pfaffians.

mod degree;
mod monomial;
pub mod pfaffian;
mod poly;
pub mod ringmap;
mod var;

pub use degree::Multidegree;
pub use monomial::Monomial;
pub use pfaffian::{generic_skew, pfaffian, pfaffian_image_map, SkewSpec};
pub use poly::Polynomial;
pub use ringmap::{det_bareiss, determinant, minor_image_map, MatrixSpec, PointMatrix, RingMap};
pub use var::{odd_subsets, Subset, Var};
