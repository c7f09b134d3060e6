//! Unit vectors, angular metric, rotations and the height/radius/angle triple
//! of a spherical cap.

use std::ops::Neg;

use thiserror::Error;

use crate::scalar::{cross, dot, norm, scale, Real};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("vector norm {norm} is too far from 1 to be a unit vector")]
    NotUnit { norm: f64 },
    #[error("vector is zero or not finite")]
    Degenerate,
    #[error("cap height {0} outside [-1, 1]")]
    HeightOutOfRange(f64),
    #[error("angular radius {0} rad outside [0, pi]")]
    AngleOutOfRange(f64),
    #[error("matrix is not a proper rotation (orthogonality defect {0})")]
    NotRotation(f64),
}

/// A point on the unit sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector3<T> {
    x: T,
    y: T,
    z: T,
}

impl<T: Real> UnitVector3<T> {
    /// Accepts coordinates whose norm is within `T::NORM_SNAP` of 1 and
    /// renormalizes them.
    pub fn new(x: T, y: T, z: T) -> Result<Self, GeomError> {
        let n = norm([x, y, z]);
        if !n.is_finite() {
            return Err(GeomError::Degenerate);
        }
        if (n - T::one()).abs() > T::NORM_SNAP {
            return Err(GeomError::NotUnit { norm: n.as_f64() });
        }
        Ok(Self { x: x / n, y: y / n, z: z / n })
    }

    /// Direction of an arbitrary nonzero vector.
    pub fn from_direction(v: [T; 3]) -> Result<Self, GeomError> {
        let n = norm(v);
        if !n.is_finite() || n <= T::min_positive_value() {
            return Err(GeomError::Degenerate);
        }
        Ok(Self { x: v[0] / n, y: v[1] / n, z: v[2] / n })
    }

    pub fn from_array(v: [T; 3]) -> Result<Self, GeomError> {
        Self::new(v[0], v[1], v[2])
    }

    /// Point at polar angle `theta` from +z and azimuth `phi` from +x.
    pub fn from_spherical(theta: T, phi: T) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        Self { x: st * cp, y: st * sp, z: ct }
    }

    pub fn x_axis() -> Self {
        Self { x: T::one(), y: T::zero(), z: T::zero() }
    }

    pub fn y_axis() -> Self {
        Self { x: T::zero(), y: T::one(), z: T::zero() }
    }

    pub fn z_axis() -> Self {
        Self { x: T::zero(), y: T::zero(), z: T::one() }
    }

    #[inline]
    pub fn x(&self) -> T {
        self.x
    }

    #[inline]
    pub fn y(&self) -> T {
        self.y
    }

    #[inline]
    pub fn z(&self) -> T {
        self.z
    }

    #[inline]
    pub fn to_array(&self) -> [T; 3] {
        [self.x, self.y, self.z]
    }

    #[inline]
    pub fn dot(&self, other: &Self) -> T {
        dot(self.to_array(), other.to_array())
    }

    #[inline]
    pub fn cross(&self, other: &Self) -> [T; 3] {
        cross(self.to_array(), other.to_array())
    }

    pub fn angle_to(&self, other: &Self) -> T {
        angular_distance(self, other)
    }

    /// Polar angle from +z and azimuth from +x, azimuth in (-pi, pi].
    pub fn to_spherical(&self) -> (T, T) {
        let rho = self.x.hypot(self.y);
        (rho.atan2(self.z), self.y.atan2(self.x))
    }

    pub fn cast<U: Real>(&self) -> UnitVector3<U> {
        let v = [U::lit(self.x.as_f64()), U::lit(self.y.as_f64()), U::lit(self.z.as_f64())];
        UnitVector3::from_direction(v).expect("unit vector stays nonzero under casting")
    }
}

impl<T: Real> Neg for UnitVector3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { x: -self.x, y: -self.y, z: -self.z }
    }
}

/// Great-circle distance, accurate near 0 and pi.
pub fn angular_distance<T: Real>(u: &UnitVector3<T>, v: &UnitVector3<T>) -> T {
    norm(u.cross(v)).atan2(u.dot(v))
}

/// Height h, planar radius r and angular radius theta of one cap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapGeometry<T> {
    height: T,
    planar_radius: T,
    angular_radius: T,
}

impl<T: Real> CapGeometry<T> {
    pub fn from_height(h: T) -> Result<Self, GeomError> {
        if !(h >= -T::one() && h <= T::one()) {
            return Err(GeomError::HeightOutOfRange(h.as_f64()));
        }
        Ok(Self {
            height: h,
            planar_radius: ((T::one() - h) * (T::one() + h)).sqrt(),
            angular_radius: h.acos(),
        })
    }

    pub fn from_angular(theta: T) -> Result<Self, GeomError> {
        if !(theta >= T::zero() && theta <= T::PI()) {
            return Err(GeomError::AngleOutOfRange(theta.as_f64()));
        }
        let (s, c) = theta.sin_cos();
        Ok(Self { height: c, planar_radius: s, angular_radius: theta })
    }

    pub fn from_degrees(deg: T) -> Result<Self, GeomError> {
        Self::from_angular(deg.to_radians())
    }

    #[inline]
    pub fn height(&self) -> T {
        self.height
    }

    #[inline]
    pub fn planar_radius(&self) -> T {
        self.planar_radius
    }

    #[inline]
    pub fn angular_radius(&self) -> T {
        self.angular_radius
    }

    pub fn degrees(&self) -> T {
        self.angular_radius.to_degrees()
    }
}

pub fn cap_from_height<T: Real>(h: T) -> Result<CapGeometry<T>, GeomError> {
    CapGeometry::from_height(h)
}

pub fn cap_from_angular<T: Real>(theta: T) -> Result<CapGeometry<T>, GeomError> {
    CapGeometry::from_angular(theta)
}

/// Proper rotation stored as a row-major 3x3 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation<T> {
    m: [[T; 3]; 3],
}

impl<T: Real> Rotation<T> {
    pub fn identity() -> Self {
        let (o, z) = (T::one(), T::zero());
        Self { m: [[o, z, z], [z, o, z], [z, z, o]] }
    }

    /// Checks orthogonality and orientation to within `tol`.
    pub fn from_matrix(m: [[T; 3]; 3], tol: T) -> Result<Self, GeomError> {
        let r = Self { m };
        let p = r.compose(&r.transpose());
        let id = Self::identity();
        let mut defect = T::zero();
        for i in 0..3 {
            for j in 0..3 {
                defect = defect.max((p.m[i][j] - id.m[i][j]).abs());
            }
        }
        defect = defect.max((r.determinant() - T::one()).abs());
        if defect > tol {
            return Err(GeomError::NotRotation(defect.as_f64()));
        }
        Ok(r)
    }

    /// Rodrigues rotation by `angle` about `axis` (right-hand rule).
    pub fn about_axis(axis: &UnitVector3<T>, angle: T) -> Self {
        let (s, c) = angle.sin_cos();
        let t = T::one() - c;
        let [x, y, z] = axis.to_array();
        Self {
            m: [
                [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
                [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
                [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
            ],
        }
    }

    pub fn about_z(angle: T) -> Self {
        Self::about_axis(&UnitVector3::z_axis(), angle)
    }

    pub fn about_x(angle: T) -> Self {
        Self::about_axis(&UnitVector3::x_axis(), angle)
    }

    /// Minimal rotation taking `u` to `v`.
    pub fn between(u: &UnitVector3<T>, v: &UnitVector3<T>) -> Self {
        let axis = u.cross(v);
        let s = norm(axis);
        let c = u.dot(v);
        if s < T::lit(1e-9) && c < T::zero() {
            // Antipodal: half turn about a deterministic axis orthogonal to u.
            let axis = half_turn_axis(u);
            return Self::about_axis(&axis, T::PI());
        }
        if s <= T::epsilon() * T::lit(4.0) {
            return Self::identity();
        }
        let axis = scale(axis, T::one() / s);
        let axis = UnitVector3 { x: axis[0], y: axis[1], z: axis[2] };
        Self::about_axis(&axis, s.atan2(c))
    }

    #[inline]
    pub fn matrix(&self) -> [[T; 3]; 3] {
        self.m
    }

    pub fn apply_vec(&self, v: [T; 3]) -> [T; 3] {
        [dot(self.m[0], v), dot(self.m[1], v), dot(self.m[2], v)]
    }

    /// Rotates a unit vector; the result is renormalized against drift.
    pub fn apply(&self, v: &UnitVector3<T>) -> UnitVector3<T> {
        let w = self.apply_vec(v.to_array());
        let n = norm(w);
        UnitVector3 { x: w[0] / n, y: w[1] / n, z: w[2] / n }
    }

    pub fn transpose(&self) -> Self {
        let m = self.m;
        Self { m: [[m[0][0], m[1][0], m[2][0]], [m[0][1], m[1][1], m[2][1]], [m[0][2], m[1][2], m[2][2]]] }
    }

    pub fn inverse(&self) -> Self {
        self.transpose()
    }

    /// `self * other`: applies `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let mut m = [[T::zero(); 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.m[i][0] * other.m[0][j] + self.m[i][1] * other.m[1][j] + self.m[i][2] * other.m[2][j];
            }
        }
        Self { m }
    }

    pub fn determinant(&self) -> T {
        let m = self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }
}

fn half_turn_axis<T: Real>(u: &UnitVector3<T>) -> UnitVector3<T> {
    for e in [UnitVector3::x_axis(), UnitVector3::y_axis()] {
        let d = e.dot(u);
        let p = [e.x - d * u.x, e.y - d * u.y, e.z - d * u.z];
        if norm(p) > T::lit(1e-6) {
            return UnitVector3::from_direction(p).expect("nonzero projection");
        }
    }
    unreachable!("x and y axes cannot both be parallel to a unit vector")
}

/// The algorithm's `rot3(u, v)`: minimal rotation with `R u = v`.
pub fn rot3<T: Real>(u: &UnitVector3<T>, v: &UnitVector3<T>) -> Rotation<T> {
    Rotation::between(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turn_axis() {
        let r = rot3(&UnitVector3::<f64>::x_axis(), &UnitVector3::z_axis());
        let w = r.apply(&UnitVector3::x_axis());
        assert!((w.z() - 1.0).abs() < 1e-15);
        // axis (0,-1,0): y is fixed
        let y = r.apply(&UnitVector3::y_axis());
        assert!((y.y() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn antipodal_axis_is_deterministic() {
        let u = UnitVector3::<f64>::new(0.0, 0.0, -1.0).unwrap();
        let r = rot3(&u, &UnitVector3::z_axis());
        assert!((r.apply(&u).z() - 1.0).abs() < 1e-15);
        // half turn about +x keeps x fixed
        assert!((r.apply(&UnitVector3::x_axis()).x() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn snaps_small_norm_error_only() {
        assert!(UnitVector3::new(1.0 + 5e-9, 0.0, 0.0).is_ok());
        assert!(matches!(UnitVector3::new(1.0 + 1e-6, 0.0, 0.0), Err(GeomError::NotUnit { .. })));
    }
}
