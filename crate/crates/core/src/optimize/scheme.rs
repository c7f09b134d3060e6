//! Symmetry schemes: low-dimensional parameterizations of codes.
//!
//! An orbit scheme lists one template per cap. A template is a representative
//! point whose coordinates are constants, signed parameters, or the signed
//! completion `sqrt(1 - u^2 - v^2)` of the other two, optionally followed by a
//! fixed rotation. Projection (`code_to_params`) undoes each rotation and
//! averages every estimate of every parameter.

use thiserror::Error;

use crate::code::{CodeError, SphericalCode};
use crate::geom::{Rotation, UnitVector3};
use crate::scalar::Real;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SchemeError {
    #[error("scheme {scheme} takes {expected} parameters, got {got}")]
    ParamCount { scheme: String, expected: usize, got: usize },
    #[error("scheme {scheme} covers {expected} caps, code has {got}")]
    CapCount { scheme: String, expected: usize, got: usize },
    #[error("cap {cap} is not on the unit sphere for these parameters (1 - u^2 - v^2 = {defect:e})")]
    NotUnit { cap: usize, defect: f64 },
    #[error("parameters give an invalid code: {0}")]
    Code(#[from] CodeError),
    #[error("code is {residual:e} rad from the scheme manifold (limit {limit:e})")]
    OffManifold { residual: f64, limit: f64 },
    #[error("no scheme named {0}")]
    Unknown(String),
}

/// Default projection limit of `code_to_params`.
pub const MANIFOLD_TOLERANCE: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coord {
    Fixed(f64),
    Param { index: usize, sign: f64 },
    /// `sign * sqrt(1 - u^2 - v^2)` over the other two coordinates.
    Complete { sign: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CapTemplate {
    pub coords: [Coord; 3],
    pub rotation: Option<[[f64; 3]; 3]>,
}

/// How the lower half of a mirror-symmetric code maps onto the upper half.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MirrorMap {
    /// z -> -z followed by a rotation about z by the given angle (degrees).
    Turn(f64),
    /// z -> -z followed by a reflection of azimuth about a vertical plane
    /// whose angle is read off the code.
    Reflect,
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Generic,
    Orbits(Vec<CapTemplate>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryScheme {
    id: String,
    n: usize,
    free_parameters: usize,
    structure: String,
    mirror: Option<MirrorMap>,
    kind: Kind,
}

fn p(index: usize) -> Coord {
    Coord::Param { index, sign: 1.0 }
}

fn m(index: usize) -> Coord {
    Coord::Param { index, sign: -1.0 }
}

const C: Coord = Coord::Complete { sign: 1.0 };
const NC: Coord = Coord::Complete { sign: -1.0 };

fn f(x: f64) -> Coord {
    Coord::Fixed(x)
}

fn cap(x: Coord, y: Coord, z: Coord) -> CapTemplate {
    CapTemplate { coords: [x, y, z], rotation: None }
}

/// Applies `rot` after the template's own rotation.
fn turned(t: CapTemplate, rot: Rotation<f64>) -> CapTemplate {
    let rot = match t.rotation {
        Some(r) => rot.compose(&Rotation::from_matrix(r, 1e-12).expect("proper rotation")),
        None => rot,
    };
    let r = rot.matrix();
    let is_identity = (0..3).all(|i| (0..3).all(|j| (r[i][j] - if i == j { 1.0 } else { 0.0 }).abs() < 1e-300));
    CapTemplate { rotation: if is_identity { None } else { Some(r) }, ..t }
}

fn about_z(deg: f64) -> Rotation<f64> {
    Rotation::about_z(deg.to_radians())
}

/// Point at height `z` on the meridian of azimuth `deg`.
fn ring(z: Coord, deg: f64) -> CapTemplate {
    turned(cap(C, f(0.0), z), about_z(deg))
}

fn pole(sign: f64) -> CapTemplate {
    cap(f(0.0), f(0.0), f(sign))
}

impl SymmetryScheme {
    fn orbits(id: &str, n: usize, free: usize, structure: &str, mirror: Option<MirrorMap>, caps: Vec<CapTemplate>) -> Self {
        assert_eq!(caps.len(), n, "scheme {id}");
        Self { id: id.into(), n, free_parameters: free, structure: structure.into(), mirror, kind: Kind::Orbits(caps) }
    }

    /// Gauge-fixed spherical coordinates: cap 1 at +z, cap 2 at azimuth 0,
    /// then (polar, azimuth) pairs for caps 3..n.
    pub fn generic(n: usize) -> Self {
        Self {
            id: "generic".into(),
            n,
            free_parameters: if n >= 2 { 2 * n - 3 } else { 0 },
            structure: "free caps, rotation gauge removed".into(),
            mirror: None,
            kind: Kind::Generic,
        }
    }

    /// The scheme the catalog uses for `n`: a symmetric structure where the
    /// catalog has one, the generic scheme otherwise.
    pub fn for_catalog(n: usize) -> Self {
        Self::structured(n).unwrap_or_else(|| Self::generic(n))
    }

    pub fn by_id(id: &str, n: usize) -> Result<Self, SchemeError> {
        if id == "generic" {
            return Ok(Self::generic(n));
        }
        match Self::structured(n) {
            Some(s) if s.id == id => Ok(s),
            _ => Err(SchemeError::Unknown(format!("{id} (for {n} caps)"))),
        }
    }

    pub fn ids() -> Vec<(usize, String)> {
        (2..=42).filter_map(|n| Self::structured(n).map(|s| (n, s.id))).collect()
    }

    fn structured(n: usize) -> Option<Self> {
        let s = match n {
            6 => Self::orbits(
                "square-ring",
                6,
                1,
                "two poles and a square ring at height a",
                None,
                vec![ring(p(0), 0.0), ring(p(0), 180.0), ring(p(0), 90.0), ring(p(0), 270.0), pole(1.0), pole(-1.0)],
            ),
            9 => {
                let mut caps: Vec<_> = [0.0, 120.0, 240.0].iter().map(|&d| ring(p(0), d)).collect();
                caps.extend([60.0, 180.0, 300.0].iter().map(|&d| ring(f(0.0), d)));
                caps.extend([0.0, 120.0, 240.0].iter().map(|&d| ring(m(0), d)));
                Self::orbits("triangle-stack", 9, 1, "three coplanar triangles at heights a, 0, -a", Some(MirrorMap::Turn(0.0)), caps)
            }
            10 => {
                let mut caps = vec![pole(1.0)];
                caps.extend([0.0, 90.0, 180.0, 270.0].iter().map(|&d| ring(p(0), d)));
                caps.extend([45.0, 135.0, 225.0, 315.0].iter().map(|&d| ring(m(0), d)));
                caps.push(pole(-1.0));
                Self::orbits("square-antiprism", 10, 1, "two poles and squares at heights a, -a turned by 45 degrees", Some(MirrorMap::Turn(45.0)), caps)
            }
            11 => Self::orbits(
                "dipoles",
                11,
                10,
                "one pole and five antipodally paired dipoles, parameters a..j",
                None,
                vec![
                    pole(1.0),
                    cap(p(1), C, p(0)),
                    cap(m(1), NC, p(0)),
                    cap(m(3), C, p(2)),
                    cap(p(3), NC, p(2)),
                    cap(p(5), C, m(4)),
                    cap(m(5), NC, m(4)),
                    cap(p(7), NC, m(6)),
                    cap(m(7), C, m(6)),
                    cap(p(9), C, m(8)),
                    cap(m(9), NC, m(8)),
                ],
            ),
            12 => {
                let upper = cap(p(0), f(0.0), C);
                let lower = cap(m(0), f(0.0), NC);
                let ax = |d: f64| Rotation::about_x(f64::to_radians(d));
                let mut caps = vec![cap(f(1.0), f(0.0), f(0.0))];
                caps.extend([0.0, 72.0, 144.0, 216.0, 288.0].iter().map(|&d| turned(upper.clone(), ax(d))));
                caps.extend([144.0, 216.0, 288.0, 0.0, 72.0].iter().map(|&d| turned(lower.clone(), ax(d))));
                caps.push(cap(f(-1.0), f(0.0), f(0.0)));
                Self::orbits("pentagon-pair", 12, 1, "two poles on the x axis and pentagons at x = a, -a", None, caps)
            }
            13 => Self::orbits(
                "mirror-13",
                13,
                6,
                "equatorial mirror, parameters a..f",
                Some(MirrorMap::Turn(0.0)),
                vec![
                    cap(C, f(0.0), p(0)),
                    cap(NC, f(0.0), p(1)),
                    cap(m(3), C, p(2)),
                    cap(m(3), NC, p(2)),
                    cap(f(1.0), f(0.0), f(0.0)),
                    cap(p(4), C, f(0.0)),
                    cap(m(5), C, f(0.0)),
                    cap(m(5), NC, f(0.0)),
                    cap(p(4), NC, f(0.0)),
                    cap(m(3), NC, m(2)),
                    cap(m(3), C, m(2)),
                    cap(NC, f(0.0), m(1)),
                    cap(C, f(0.0), m(0)),
                ],
            ),
            14 => {
                let mut caps = vec![pole(1.0)];
                caps.extend([-60.0, 120.0, 60.0, 240.0, 0.0, 180.0].iter().map(|&d| ring(p(0), d)));
                caps.extend([270.0, 90.0, -30.0, 150.0, 30.0, 210.0].iter().map(|&d| ring(m(0), d)));
                caps.push(pole(-1.0));
                Self::orbits("hexagon-pair", 14, 1, "two poles and hexagons at heights a, -a turned by 30 degrees", Some(MirrorMap::Turn(30.0)), caps)
            }
            15 => {
                let h = 3f64.sqrt() / 2.0;
                Self::orbits(
                    "mirror-15",
                    15,
                    6,
                    "equatorial mirror, parameters a..f",
                    Some(MirrorMap::Turn(0.0)),
                    vec![
                        cap(f(-0.5), f(0.0), f(h)),
                        cap(p(1), C, p(0)),
                        cap(p(1), NC, p(0)),
                        cap(m(3), C, p(2)),
                        cap(m(3), NC, p(2)),
                        cap(f(1.0), f(0.0), f(0.0)),
                        cap(m(4), C, f(0.0)),
                        cap(m(4), NC, f(0.0)),
                        cap(p(5), C, f(0.0)),
                        cap(p(5), NC, f(0.0)),
                        cap(m(3), NC, m(2)),
                        cap(m(3), C, m(2)),
                        cap(p(1), NC, m(0)),
                        cap(p(1), C, m(0)),
                        cap(f(-0.5), f(0.0), f(-h)),
                    ],
                )
            }
            16 => {
                let mut caps = vec![pole(1.0)];
                caps.extend([0.0, 60.0, -60.0, 180.0, 240.0, 120.0].iter().map(|&d| ring(p(0), d)));
                caps.extend([210.0, 330.0, 90.0].iter().map(|&d| ring(p(1), d)));
                caps.extend([270.0, 30.0, 150.0].iter().map(|&d| ring(p(2), d)));
                caps.extend([90.0, 330.0, 210.0].iter().map(|&d| ring(p(3), d)));
                Self::orbits("pole-hexagon-triangles", 16, 4, "one pole, a hexagon and three triangles at four free heights", None, caps)
            }
            17 => Self::orbits(
                "mirror-17",
                17,
                8,
                "equatorial mirror, parameters a..h",
                Some(MirrorMap::Turn(0.0)),
                vec![
                    cap(C, f(0.0), p(0)),
                    cap(m(2), C, p(1)),
                    cap(m(2), NC, p(1)),
                    cap(NC, f(0.0), p(3)),
                    cap(p(5), C, p(4)),
                    cap(p(5), NC, p(4)),
                    cap(f(1.0), f(0.0), f(0.0)),
                    cap(m(6), C, f(0.0)),
                    cap(m(6), NC, f(0.0)),
                    cap(m(7), C, f(0.0)),
                    cap(m(7), NC, f(0.0)),
                    cap(p(5), NC, m(4)),
                    cap(p(5), C, m(4)),
                    cap(NC, f(0.0), m(3)),
                    cap(m(2), NC, m(1)),
                    cap(m(2), C, m(1)),
                    cap(C, f(0.0), m(0)),
                ],
            ),
            18 => {
                // Each triangle: representative, then turned by 240 and 120
                // degrees (or 120 and 240) following the table's row order.
                let tri = |rep: CapTemplate, order: [f64; 3]| -> Vec<CapTemplate> {
                    order.iter().map(|&d| turned(rep.clone(), about_z(d))).collect()
                };
                let mut caps = tri(ring(p(0), 45.0), [0.0, 240.0, 120.0]);
                caps.extend(tri(cap(p(2), NC, p(1)), [0.0, 240.0, 120.0]));
                caps.extend(tri(cap(p(4), C, p(3)), [0.0, 120.0, 240.0]));
                caps.extend(tri(cap(p(5), NC, m(3)), [0.0, 240.0, 120.0]));
                caps.extend(tri(cap(p(6), C, m(1)), [0.0, 120.0, 240.0]));
                caps.extend(tri(cap(p(7), C, m(0)), [0.0, 120.0, 240.0]));
                Self::orbits("triangle-stack-6", 18, 8, "six coplanar triangles about the z axis, parameters a..h", Some(MirrorMap::Reflect), caps)
            }
            20 => Self::orbits(
                "mirror-20",
                20,
                5,
                "equatorial hexagon, two rectangles and mirrored caps, parameters a..e",
                Some(MirrorMap::Turn(0.0)),
                vec![
                    cap(f(0.0), NC, p(0)),
                    cap(f(0.0), C, p(1)),
                    cap(p(3), C, p(2)),
                    cap(m(3), C, p(2)),
                    cap(p(2), NC, p(3)),
                    cap(m(2), NC, p(3)),
                    cap(f(0.0), NC, p(4)),
                    cap(p(0), C, f(0.0)),
                    cap(m(0), C, f(0.0)),
                    cap(p(1), NC, f(0.0)),
                    cap(m(1), NC, f(0.0)),
                    cap(p(4), C, f(0.0)),
                    cap(m(4), C, f(0.0)),
                    cap(f(0.0), NC, m(4)),
                    cap(p(2), NC, m(3)),
                    cap(m(2), NC, m(3)),
                    cap(p(3), C, m(2)),
                    cap(m(3), C, m(2)),
                    cap(f(0.0), C, m(1)),
                    cap(f(0.0), NC, m(0)),
                ],
            ),
            22 => Self::orbits(
                "pentagon-stack",
                22,
                6,
                "two poles and four coplanar pentagons, central inversion, parameters a..f",
                Some(MirrorMap::Turn(180.0)),
                vec![
                    pole(1.0),
                    cap(C, f(0.0), p(0)),
                    cap(p(1), C, p(0)),
                    cap(m(2), C, p(0)),
                    cap(m(2), NC, p(0)),
                    cap(p(1), NC, p(0)),
                    cap(NC, f(0.0), p(3)),
                    cap(m(4), NC, p(3)),
                    cap(p(5), NC, p(3)),
                    cap(p(5), C, p(3)),
                    cap(m(4), C, p(3)),
                    cap(C, f(0.0), m(3)),
                    cap(p(4), C, m(3)),
                    cap(m(5), C, m(3)),
                    cap(m(5), NC, m(3)),
                    cap(p(4), NC, m(3)),
                    cap(NC, f(0.0), m(0)),
                    cap(m(1), NC, m(0)),
                    cap(p(2), NC, m(0)),
                    cap(p(2), C, m(0)),
                    cap(m(1), C, m(0)),
                    pole(-1.0),
                ],
            ),
            38 => {
                let a_ring = [90.0, 30.0, -30.0, -90.0, -150.0, 150.0];
                let b_ring = [0.0, 60.0, 120.0, 180.0, 240.0, 300.0];
                let mut caps = vec![pole(1.0)];
                for (z, angles) in [(p(0), a_ring), (p(1), b_ring), (p(2), a_ring), (m(2), b_ring), (m(1), a_ring), (m(0), b_ring)] {
                    caps.extend(angles.iter().map(|&d| ring(z, d)));
                }
                caps.push(pole(-1.0));
                Self::orbits("hexagon-stack", 38, 3, "two poles and six hexagons (twelve triangles) at heights a, b, c, -c, -b, -a", Some(MirrorMap::Turn(30.0)), caps)
            }
            42 => {
                // Seven triangles above the equator at heights z1..z7 with
                // phases set by x-coordinates x2..x7 (the first is pinned at
                // azimuth 0), and seven below with their own phases.
                let mut caps = Vec::with_capacity(42);
                let upper: Vec<CapTemplate> = (0..7)
                    .map(|k| if k == 0 { ring(p(0), 0.0) } else { cap(p(6 + k), C, p(k)) })
                    .collect();
                for rep in upper {
                    caps.extend([0.0, 120.0, 240.0].iter().map(|&d| turned(rep.clone(), about_z(d))));
                }
                for k in 0..7 {
                    let rep = cap(p(13 + k), C, m(k));
                    caps.extend([0.0, 120.0, 240.0].iter().map(|&d| turned(rep.clone(), about_z(d))));
                }
                Self::orbits("triangle-stack-14", 42, 20, "fourteen coplanar triangles about the z axis, seven above and seven below", None, caps)
            }
            _ => return None,
        };
        Some(s)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn free_parameters(&self) -> usize {
        self.free_parameters
    }

    pub fn structure(&self) -> &str {
        &self.structure
    }

    pub fn mirror(&self) -> Option<MirrorMap> {
        self.mirror
    }

    pub fn is_generic(&self) -> bool {
        matches!(self.kind, Kind::Generic)
    }

    pub fn templates(&self) -> Option<&[CapTemplate]> {
        match &self.kind {
            Kind::Orbits(t) => Some(t),
            Kind::Generic => None,
        }
    }

    pub fn params_to_code<T: Real>(&self, params: &[T]) -> Result<SphericalCode<T>, SchemeError> {
        if params.len() != self.free_parameters {
            return Err(SchemeError::ParamCount { scheme: self.id.clone(), expected: self.free_parameters, got: params.len() });
        }
        let points = match &self.kind {
            Kind::Generic => {
                let mut pts = vec![UnitVector3::z_axis()];
                if self.n >= 2 {
                    pts.push(UnitVector3::from_spherical(params[0], T::zero()));
                }
                for k in 0..self.n.saturating_sub(2) {
                    pts.push(UnitVector3::from_spherical(params[1 + 2 * k], params[2 + 2 * k]));
                }
                pts
            }
            Kind::Orbits(caps) => caps.iter().enumerate().map(|(i, t)| realize(i, t, params)).collect::<Result<Vec<_>, _>>()?,
        };
        Ok(SphericalCode::new(points)?)
    }

    /// Least-squares parameters of `code`, rejecting codes farther than
    /// `MANIFOLD_TOLERANCE` from the scheme.
    pub fn code_to_params<T: Real>(&self, code: &SphericalCode<T>) -> Result<Vec<T>, SchemeError> {
        self.project(code, T::lit(MANIFOLD_TOLERANCE)).map(|(p, _)| p)
    }

    /// Parameters of `code` and the code they rebuild.
    ///
    /// For the generic scheme the rebuilt code is `code` itself: the gauge
    /// only fixes how parameters are read, not where the caps sit.
    pub fn project<T: Real>(&self, code: &SphericalCode<T>, limit: T) -> Result<(Vec<T>, SphericalCode<T>), SchemeError> {
        if code.len() != self.n {
            return Err(SchemeError::CapCount { scheme: self.id.clone(), expected: self.n, got: code.len() });
        }
        match &self.kind {
            Kind::Generic => Ok((generic_params(code), code.clone())),
            Kind::Orbits(caps) => {
                let mut sum = vec![T::zero(); self.free_parameters];
                let mut count = vec![0usize; self.free_parameters];
                for (t, q) in caps.iter().zip(code.points()) {
                    let local = match t.rotation {
                        Some(r) => lit_rotation::<T>(r).transpose().apply_vec(q.to_array()),
                        None => q.to_array(),
                    };
                    for (c, v) in t.coords.iter().zip(local) {
                        if let Coord::Param { index, sign } = *c {
                            sum[index] = sum[index] + T::lit(sign) * v;
                            count[index] += 1;
                        }
                    }
                }
                let params: Vec<T> = sum.iter().zip(&count).map(|(&s, &c)| s / T::lit(c.max(1) as f64)).collect();
                let rebuilt = self
                    .params_to_code(&params)
                    .map_err(|_| SchemeError::OffManifold { residual: f64::INFINITY, limit: limit.as_f64() })?;
                let residual = rebuilt.max_displacement(code);
                if residual > limit {
                    return Err(SchemeError::OffManifold { residual: residual.as_f64(), limit: limit.as_f64() });
                }
                Ok((params, rebuilt))
            }
        }
    }
}

fn lit_rotation<T: Real>(r: [[f64; 3]; 3]) -> Rotation<T> {
    let m = r.map(|row| row.map(T::lit));
    Rotation::from_matrix(m, T::lit(1e-6)).expect("template rotations are proper")
}

fn realize<T: Real>(i: usize, t: &CapTemplate, params: &[T]) -> Result<UnitVector3<T>, SchemeError> {
    let mut v = [T::zero(); 3];
    let mut hole = None;
    for (k, c) in t.coords.iter().enumerate() {
        match *c {
            Coord::Fixed(x) => v[k] = T::lit(x),
            Coord::Param { index, sign } => v[k] = T::lit(sign) * params[index],
            Coord::Complete { sign } => hole = Some((k, sign)),
        }
    }
    if let Some((k, sign)) = hole {
        let rest = T::one() - (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if rest < -T::NORM_SNAP {
            return Err(SchemeError::NotUnit { cap: i + 1, defect: rest.as_f64() });
        }
        v[k] = T::lit(sign) * rest.max(T::zero()).sqrt();
    }
    let v = match t.rotation {
        Some(r) => lit_rotation::<T>(r).apply_vec(v),
        None => v,
    };
    UnitVector3::from_array(v).map_err(|_| SchemeError::NotUnit { cap: i + 1, defect: (T::one() - crate::scalar::dot(v, v)).as_f64() })
}

/// Rotation taking cap 1 to +z and cap 2 to the x-z half-plane with x >= 0.
pub fn gauge_rotation<T: Real>(code: &SphericalCode<T>) -> Rotation<T> {
    let r1 = Rotation::between(code.point(0), &UnitVector3::z_axis());
    if code.len() < 2 {
        return r1;
    }
    let q = r1.apply(code.point(1));
    let phi = q.y().atan2(q.x());
    Rotation::about_z(-phi).compose(&r1)
}

fn generic_params<T: Real>(code: &SphericalCode<T>) -> Vec<T> {
    let g = gauge_rotation(code);
    let mut out = Vec::with_capacity(2 * code.len());
    for (i, p) in code.points().iter().enumerate().skip(1) {
        let (theta, phi) = g.apply(p).to_spherical();
        out.push(theta);
        if i >= 2 {
            out.push(phi);
        }
    }
    out
}
