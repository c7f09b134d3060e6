//! Spherical Voronoi mesh of a code and its exact covering radius.
//!
//! The mesh is the dual of the convex hull. Facet circumcenters that agree to
//! within `T::MERGE` radians are merged, so the highly symmetric catalog codes
//! get one vertex per "cap intersection point" with its full incidence set.

use thiserror::Error;

use crate::code::SphericalCode;
use crate::geom::{angular_distance, CapGeometry, UnitVector3};
use crate::hull::{hull, HullShape};
use crate::scalar::{add, cross, norm, scale, sub, Real};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VoronoiError {
    #[error("all caps lie on one great circle; the Delaunay triangulation is undefined")]
    DegenerateCode,
    #[error("convex hull construction failed: {0}")]
    HullFailure(String),
    #[error("cell is empty")]
    EmptyCell,
}

/// A Voronoi vertex with the caps equidistant to it.
#[derive(Debug, Clone, PartialEq)]
pub struct MeshVertex<T> {
    pub position: UnitVector3<T>,
    /// Sorted cap indices.
    pub caps: Vec<usize>,
    /// Distance to the nearest cap.
    pub radius: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VoronoiMesh<T> {
    vertices: Vec<MeshVertex<T>>,
    cells: Vec<Vec<usize>>,
    triangles: Vec<[usize; 3]>,
}

impl<T: Real> VoronoiMesh<T> {
    pub fn vertices(&self) -> &[MeshVertex<T>] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &MeshVertex<T> {
        &self.vertices[i]
    }

    /// Vertex indices of cell `cap`, counterclockwise seen from outside.
    pub fn cell(&self, cap: usize) -> &[usize] {
        &self.cells[cap]
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_points(&self, cap: usize) -> Vec<UnitVector3<T>> {
        self.cells[cap].iter().map(|&v| self.vertices[v].position).collect()
    }

    /// The Delaunay triangles the mesh was built from.
    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Largest vertex-to-nearest-cap distance.
    pub fn max_vertex_radius(&self) -> T {
        self.vertices.iter().map(|v| v.radius).fold(T::zero(), T::max)
    }

    pub fn euler_characteristic(&self) -> i64 {
        let edges: usize = self.cells.iter().map(Vec::len).sum::<usize>() / 2;
        self.vertices.len() as i64 - edges as i64 + self.cells.len() as i64
    }
}

/// Farthest point of the sphere from a code.
#[derive(Debug, Clone, PartialEq)]
pub struct CoveringResult<T> {
    pub cap: CapGeometry<T>,
    pub witness_vertex: UnitVector3<T>,
    pub witness_caps: Vec<usize>,
}

impl<T: Real> CoveringResult<T> {
    pub fn angular_radius(&self) -> T {
        self.cap.angular_radius()
    }

    pub fn degrees(&self) -> T {
        self.cap.degrees()
    }
}

/// Delaunay triangles (convex hull facets) of a full-rank code.
pub fn delaunay<T: Real>(code: &SphericalCode<T>) -> Result<Vec<[usize; 3]>, VoronoiError> {
    match hull(&code.coords()).map_err(|e| VoronoiError::HullFailure(e.0))? {
        HullShape::Solid(f) | HullShape::Flat(f) => Ok(f),
        HullShape::GreatCircle(_) => Err(VoronoiError::DegenerateCode),
    }
}

/// Circumcenter direction of a counterclockwise spherical triangle.
fn circumcenter<T: Real>(a: [T; 3], b: [T; 3], c: [T; 3]) -> [T; 3] {
    let n = add(add(cross(a, b), cross(b, c)), cross(c, a));
    scale(n, T::one() / norm(n))
}

pub fn mesh<T: Real>(code: &SphericalCode<T>) -> Result<VoronoiMesh<T>, VoronoiError> {
    let triangles = delaunay(code)?;
    let pts = code.coords();

    let mut acc: Vec<([T; 3], usize, Vec<usize>)> = Vec::new();
    let mut reps: Vec<UnitVector3<T>> = Vec::new();
    for t in &triangles {
        let cc = circumcenter(pts[t[0]], pts[t[1]], pts[t[2]]);
        let u = UnitVector3::from_direction(cc).map_err(|_| VoronoiError::HullFailure("zero-area facet".into()))?;
        match reps.iter().position(|r| angular_distance(r, &u) < T::MERGE) {
            Some(k) => {
                acc[k].0 = add(acc[k].0, cc);
                acc[k].1 += 1;
                acc[k].2.extend_from_slice(t);
            }
            None => {
                reps.push(u);
                acc.push((cc, 1, t.to_vec()));
            }
        }
    }

    let vertices: Vec<MeshVertex<T>> = acc
        .into_iter()
        .map(|(sum, _, mut caps)| {
            caps.sort_unstable();
            caps.dedup();
            let position = UnitVector3::from_direction(sum).expect("merged circumcenters do not cancel");
            let radius = caps
                .iter()
                .map(|&i| angular_distance(&position, code.point(i)))
                .fold(T::infinity(), T::min);
            MeshVertex { position, caps, radius }
        })
        .collect();

    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); code.len()];
    for (vi, v) in vertices.iter().enumerate() {
        for &c in &v.caps {
            cells[c].push(vi);
        }
    }
    for (ci, cell) in cells.iter_mut().enumerate() {
        let p = code.point(ci).to_array();
        let (e1, e2) = tangent_frame(p);
        let key = |vi: &usize| {
            let q = vertices[*vi].position.to_array();
            crate::scalar::dot(q, e2).atan2(crate::scalar::dot(q, e1))
        };
        cell.sort_by(|a, b| key(a).partial_cmp(&key(b)).unwrap().then(a.cmp(b)));
    }

    Ok(VoronoiMesh { vertices, cells, triangles })
}

/// Right-handed orthonormal pair spanning the tangent plane at `p`.
pub(crate) fn tangent_frame<T: Real>(p: [T; 3]) -> ([T; 3], [T; 3]) {
    let seed = if p[0].abs() < T::lit(0.9) { [T::one(), T::zero(), T::zero()] } else { [T::zero(), T::one(), T::zero()] };
    let e1 = sub(seed, scale(p, crate::scalar::dot(seed, p)));
    let e1 = scale(e1, T::one() / norm(e1));
    (e1, cross(p, e1))
}

fn nearest<T: Real>(code: &SphericalCode<T>, x: &UnitVector3<T>) -> T {
    code.points().iter().map(|p| angular_distance(p, x)).fold(T::infinity(), T::min)
}

/// Exact covering radius: the largest distance from any sphere point to its
/// nearest cap center.
///
/// Besides Voronoi vertices, the antipode of each Delaunay edge midpoint is a
/// candidate; it wins only for codes crowded into a hemisphere.
pub fn covering_radius<T: Real>(code: &SphericalCode<T>) -> Result<CoveringResult<T>, VoronoiError> {
    let pts = code.coords();
    let shape = hull(&pts).map_err(|e| VoronoiError::HullFailure(e.0))?;
    if let HullShape::GreatCircle(nrm) = shape {
        return Ok(great_circle_covering(code, nrm.map(T::lit)));
    }
    let m = mesh(code)?;
    let mut best: Option<(T, UnitVector3<T>, Vec<usize>)> = None;
    for v in m.vertices() {
        if best.as_ref().is_none_or(|b| v.radius > b.0) {
            best = Some((v.radius, v.position, v.caps.clone()));
        }
    }
    let mut best = best.expect("a full-rank mesh has vertices");
    for t in m.triangles() {
        for k in 0..3 {
            let (i, j) = (t[k], t[(k + 1) % 3]);
            if i > j {
                continue;
            }
            let mid = add(pts[i], pts[j]);
            let Ok(x) = UnitVector3::from_direction(scale(mid, -T::one())) else { continue };
            let d = nearest(code, &x);
            if d > best.0 + T::MERGE {
                best = (d, x, vec![i, j]);
            }
        }
    }
    let (theta, witness_vertex, witness_caps) = best;
    Ok(CoveringResult { cap: CapGeometry::from_angular(theta.min(T::PI())).expect("distance in [0, pi]"), witness_vertex, witness_caps })
}

/// All caps on one great circle: the plane's poles are at distance pi/2 from
/// every cap, and the middle of a gap wider than pi is farther still.
fn great_circle_covering<T: Real>(code: &SphericalCode<T>, nrm: [T; 3]) -> CoveringResult<T> {
    let (e1, e2) = tangent_frame(nrm);
    let mut ang: Vec<(T, usize)> = code
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| (crate::scalar::dot(p.to_array(), e2).atan2(crate::scalar::dot(p.to_array(), e1)), i))
        .collect();
    ang.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)));
    let two_pi = T::PI() + T::PI();
    let (mut gap, mut at) = (T::zero(), 0);
    for k in 0..ang.len() {
        let next = if k + 1 < ang.len() { ang[k + 1].0 } else { ang[0].0 + two_pi };
        let g = next - ang[k].0;
        if g > gap {
            gap = g;
            at = k;
        }
    }
    let half_pi = T::FRAC_PI_2();
    if gap / T::lit(2.0) > half_pi + T::MERGE {
        let phi = ang[at].0 + gap / T::lit(2.0);
        let (s, c) = phi.sin_cos();
        let w = add(scale(e1, c), scale(e2, s));
        let next = ang[(at + 1) % ang.len()].1;
        let mut caps = vec![ang[at].1, next];
        caps.sort_unstable();
        return CoveringResult {
            cap: CapGeometry::from_angular(gap / T::lit(2.0)).expect("half gap within [0, pi]"),
            witness_vertex: UnitVector3::from_direction(w).expect("unit combination"),
            witness_caps: caps,
        };
    }
    CoveringResult {
        cap: CapGeometry::from_angular(half_pi).expect("pi/2 is in range"),
        witness_vertex: UnitVector3::from_direction(nrm).expect("unit normal"),
        witness_caps: (0..code.len()).collect(),
    }
}

/// Euclidean mean of the cell vertices, not renormalized.
pub fn cell_centroid<T: Real>(cell: &[UnitVector3<T>]) -> Result<[T; 3], VoronoiError> {
    if cell.is_empty() {
        return Err(VoronoiError::EmptyCell);
    }
    let sum = cell.iter().fold([T::zero(); 3], |s, p| add(s, p.to_array()));
    Ok(scale(sum, T::one() / T::lit(cell.len() as f64)))
}

/// `samples` points of the Fibonacci lattice, nearly uniform on the sphere.
pub fn fibonacci_sphere(samples: usize) -> Vec<[f64; 3]> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..samples)
        .map(|i| {
            let z = 1.0 - (2.0 * i as f64 + 1.0) / samples as f64;
            let r = (1.0 - z * z).sqrt();
            let (s, c) = (golden * i as f64).sin_cos();
            [r * c, r * s, z]
        })
        .collect()
}

/// Nominal spacing of a lattice with `samples` points: the side of a square
/// of the same area per point.
pub fn lattice_spacing(samples: usize) -> f64 {
    (4.0 * std::f64::consts::PI / samples as f64).sqrt()
}

/// Brute-force covering radius: farthest lattice point from its nearest cap.
/// Never exceeds the exact value; falls short by about one lattice spacing at
/// most.
pub fn sampled_covering_radius<T: Real>(code: &SphericalCode<T>, samples: usize) -> f64 {
    let caps: Vec<[f64; 3]> = code.coords().iter().map(|p| p.map(T::as_f64)).collect();
    let worst = fibonacci_sphere(samples)
        .iter()
        .map(|q| caps.iter().map(|c| c[0] * q[0] + c[1] * q[1] + c[2] * q[2]).fold(f64::NEG_INFINITY, f64::max))
        .fold(f64::INFINITY, f64::min);
    worst.clamp(-1.0, 1.0).acos()
}
