//! Least-squares plane through a point set.

use thiserror::Error;

use crate::geom::UnitVector3;
use crate::scalar::{dot, sub, Real};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FitError {
    #[error("plane fit needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("points are collinear")]
    Collinear,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlaneFit<T> {
    pub normal: UnitVector3<T>,
    pub offset: T,
    /// Root mean square distance of the points from the plane.
    pub rms: T,
    /// Largest distance of a point from the plane.
    pub max_deviation: T,
    /// Scatter matrix eigenvalues, ascending.
    pub eigenvalues: [T; 3],
}

/// Eigen-decomposition of a symmetric 3x3 matrix by cyclic Jacobi sweeps.
/// Returns eigenvalues ascending and the matching eigenvectors.
pub fn symmetric_eigen3<T: Real>(a: [[T; 3]; 3]) -> ([T; 3], [[T; 3]; 3]) {
    let mut a = a;
    let mut v = [[T::zero(); 3]; 3];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = T::one();
    }
    for _sweep in 0..64 {
        let off = a[0][1].abs() + a[0][2].abs() + a[1][2].abs();
        let diag = a[0][0].abs() + a[1][1].abs() + a[2][2].abs();
        if off <= T::epsilon() * T::epsilon() * diag || off == T::zero() {
            break;
        }
        for (p, q) in [(0usize, 1usize), (0, 2), (1, 2)] {
            if a[p][q] == T::zero() {
                continue;
            }
            let theta = (a[q][q] - a[p][p]) / (T::lit(2.0) * a[p][q]);
            let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
            let c = T::one() / (t * t + T::one()).sqrt();
            let s = t * c;
            for k in 0..3 {
                let (akp, akq) = (a[k][p], a[k][q]);
                a[k][p] = c * akp - s * akq;
                a[k][q] = s * akp + c * akq;
            }
            for k in 0..3 {
                let (apk, aqk) = (a[p][k], a[q][k]);
                a[p][k] = c * apk - s * aqk;
                a[q][k] = s * apk + c * aqk;
            }
            for row in v.iter_mut() {
                let (vp, vq) = (row[p], row[q]);
                row[p] = c * vp - s * vq;
                row[q] = s * vp + c * vq;
            }
        }
    }
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|&i, &j| a[i][i].partial_cmp(&a[j][j]).unwrap());
    let vals = idx.map(|i| a[i][i]);
    let vecs = idx.map(|i| [v[0][i], v[1][i], v[2][i]]);
    (vals, vecs)
}

/// Plane minimizing the sum of squared distances, through `centroid`.
///
/// The normal is the scatter eigenvector with the smallest eigenvalue, signed
/// so that `normal . centroid >= 0`.
pub fn fit_plane<T: Real>(points: &[[T; 3]], centroid: [T; 3]) -> Result<PlaneFit<T>, FitError> {
    if points.len() < 3 {
        return Err(FitError::TooFewPoints(points.len()));
    }
    let mut s = [[T::zero(); 3]; 3];
    for p in points {
        let d = sub(*p, centroid);
        for i in 0..3 {
            for j in 0..3 {
                s[i][j] = s[i][j] + d[i] * d[j];
            }
        }
    }
    let (vals, vecs) = symmetric_eigen3(s);
    if vals[0].abs() < T::COLLINEAR && vals[1].abs() < T::COLLINEAR {
        return Err(FitError::Collinear);
    }
    let mut nrm = vecs[0];
    if dot(nrm, centroid) < T::zero() {
        nrm = nrm.map(|x| -x);
    }
    let normal = UnitVector3::from_direction(nrm).expect("eigenvectors are unit");
    let offset = dot(normal.to_array(), centroid);
    let (mut sq, mut worst) = (T::zero(), T::zero());
    for p in points {
        let d = dot(normal.to_array(), *p) - offset;
        sq = sq + d * d;
        worst = worst.max(d.abs());
    }
    Ok(PlaneFit { normal, offset, rms: (sq / T::lit(points.len() as f64)).sqrt(), max_deviation: worst, eigenvalues: vals })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigen_of_diagonal() {
        let (vals, vecs) = symmetric_eigen3([[3.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 2.0]]);
        assert_eq!(vals, [1.0, 2.0, 3.0]);
        assert_eq!(vecs[0], [0.0, 1.0, 0.0]);
    }

    #[test]
    fn square_at_half_height() {
        let pts: [[f64; 3]; 4] = [[0.5, 0.5, 0.5], [-0.5, 0.5, 0.5], [-0.5, -0.5, 0.5], [0.5, -0.5, 0.5]];
        let fit = fit_plane(&pts, [0.0, 0.0, 0.5]).unwrap();
        assert!((fit.normal.z() - 1.0).abs() < 1e-15);
        assert!((fit.offset - 0.5).abs() < 1e-15);
        assert!(fit.max_deviation < 1e-15);
    }

    #[test]
    fn collinear_rejected() {
        let pts = [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [2.0, 0.0, 0.0]];
        assert_eq!(fit_plane(&pts, [1.0, 0.0, 0.0]), Err(FitError::Collinear));
    }
}
