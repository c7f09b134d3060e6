//! Ordered sets of cap centers.

use thiserror::Error;

use crate::geom::{angular_distance, GeomError, Rotation, UnitVector3};
use crate::scalar::Real;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CodeError {
    #[error("a code needs at least 2 caps, got {0}")]
    TooFew(usize),
    #[error("caps {i} and {j} coincide (separation {separation:e} rad)")]
    Coincident { i: usize, j: usize, separation: f64 },
    #[error("cap {index}: {source}")]
    Point { index: usize, source: GeomError },
}

/// Cap centers in the order of the source table.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalCode<T> {
    points: Vec<UnitVector3<T>>,
}

impl<T: Real> SphericalCode<T> {
    pub fn new(points: Vec<UnitVector3<T>>) -> Result<Self, CodeError> {
        if points.len() < 2 {
            return Err(CodeError::TooFew(points.len()));
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                let d = angular_distance(&points[i], &points[j]);
                if d < T::MIN_SEPARATION {
                    return Err(CodeError::Coincident { i, j, separation: d.as_f64() });
                }
            }
        }
        Ok(Self { points })
    }

    pub fn from_coords(coords: &[[T; 3]]) -> Result<Self, CodeError> {
        let points = coords
            .iter()
            .enumerate()
            .map(|(index, c)| UnitVector3::from_array(*c).map_err(|source| CodeError::Point { index, source }))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(points)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false: a valid code has at least two caps.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn points(&self) -> &[UnitVector3<T>] {
        &self.points
    }

    #[inline]
    pub fn point(&self, i: usize) -> &UnitVector3<T> {
        &self.points[i]
    }

    pub fn coords(&self) -> Vec<[T; 3]> {
        self.points.iter().map(|p| p.to_array()).collect()
    }

    pub fn rotated(&self, r: &Rotation<T>) -> Self {
        Self { points: self.points.iter().map(|p| r.apply(p)).collect() }
    }

    /// The code with one more cap appended.
    pub fn with_point(&self, p: UnitVector3<T>) -> Result<Self, CodeError> {
        let mut points = self.points.clone();
        points.push(p);
        Self::new(points)
    }

    /// Largest angular displacement between corresponding caps.
    pub fn max_displacement(&self, other: &Self) -> T {
        assert_eq!(self.len(), other.len(), "codes of different size");
        self.points
            .iter()
            .zip(&other.points)
            .map(|(a, b)| angular_distance(a, b))
            .fold(T::zero(), T::max)
    }

    /// Smallest pairwise angular separation.
    pub fn min_separation(&self) -> T {
        let mut best = T::PI();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                best = best.min(angular_distance(&self.points[i], &self.points[j]));
            }
        }
        best
    }

    pub fn cast<U: Real>(&self) -> Result<SphericalCode<U>, CodeError> {
        SphericalCode::new(self.points.iter().map(|p| p.cast()).collect())
    }
}
