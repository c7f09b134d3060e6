//! Scalar abstraction shared by the geometric core.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point type usable by the geometry, mesh and plane-fit code.
///
/// The tolerances are per-type because a value that is a comfortable margin in
/// `f64` (say 1e-12) is below the rounding floor of `f32`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Largest norm deviation a constructor silently normalizes away.
    const NORM_SNAP: Self;
    /// Minimum angular separation between two caps of one code (radians).
    const MIN_SEPARATION: Self;
    /// Circumcenters closer than this (radians) are merged into one vertex.
    const MERGE: Self;
    /// Orientation threshold used by the hull visibility test.
    const HULL_EPS: Self;
    /// Scatter eigenvalues below this count as zero (collinear point sets).
    const COLLINEAR: Self;

    /// Converts an `f64` literal; every literal in this crate is representable.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal fits the scalar type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const NORM_SNAP: Self = 1e-8;
    const MIN_SEPARATION: Self = 1e-9;
    const MERGE: Self = 1e-9;
    const HULL_EPS: Self = 1e-13;
    const COLLINEAR: Self = 1e-18;
}

impl Real for f32 {
    const NORM_SNAP: Self = 1e-4;
    const MIN_SEPARATION: Self = 1e-4;
    const MERGE: Self = 2e-4;
    const HULL_EPS: Self = 1e-6;
    const COLLINEAR: Self = 1e-9;
}

#[inline]
pub(crate) fn dot<T: Real>(a: [T; 3], b: [T; 3]) -> T {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
pub(crate) fn cross<T: Real>(a: [T; 3], b: [T; 3]) -> [T; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
pub(crate) fn sub<T: Real>(a: [T; 3], b: [T; 3]) -> [T; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
pub(crate) fn add<T: Real>(a: [T; 3], b: [T; 3]) -> [T; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

#[inline]
pub(crate) fn scale<T: Real>(a: [T; 3], s: T) -> [T; 3] {
    [a[0] * s, a[1] * s, a[2] * s]
}

#[inline]
pub(crate) fn norm<T: Real>(a: [T; 3]) -> T {
    dot(a, a).sqrt()
}
