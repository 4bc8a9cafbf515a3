//! The concrete maps studied by this crate.

use crate::error::Result;
use crate::exactnum::{Rational, TRational, TPoly};
use crate::multipoly::{minor_image_map, pfaffian_image_map, MatrixSpec, RingMap, SkewSpec};

/// `U(t) = ((1, t, …, t⁵), (t⁵, …, t, 1))`.
pub fn moment_curve_points() -> [[TRational; 6]; 2] {
    let tp = |k: u32| TRational::from_poly(TPoly::monomial(k, Rational::from_integer(1.into())));
    [
        std::array::from_fn(|j| tp(j as u32)),
        std::array::from_fn(|j| tp(5 - j as u32)),
    ]
}

pub fn moment_curve_spec() -> MatrixSpec<TRational> {
    MatrixSpec::at_points(moment_curve_points()).expect("distinct points")
}

/// Odd minors of the generic 5×6 matrix; its kernel is I.
pub fn generic_minors() -> RingMap<Rational> {
    minor_image_map(&MatrixSpec::Generic).with_name("I")
}

/// Odd minors of the special matrix at `U(t)`; its kernel is J.
pub fn moment_curve_minors() -> RingMap<TRational> {
    minor_image_map(&moment_curve_spec()).with_name("J")
}

/// Odd minors at an arbitrary point matrix.
pub fn minors_at(rows: [[TRational; 6]; 2]) -> Result<RingMap<TRational>> {
    Ok(minor_image_map(&MatrixSpec::at_points(rows)?).with_name("J"))
}

/// Principal subpfaffians under the default bijection.
pub fn spinor_pfaffians() -> RingMap<Rational> {
    pfaffian_image_map(&SkewSpec::default()).with_name("spinor")
}
