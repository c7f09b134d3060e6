//! Covering the unit sphere with equal caps: exact covering radii from the
//! spherical Voronoi mesh, a plane-fit optimizer, and a catalog of known
//! configurations with their algebraic data.
//!
//! The geometry is generic over the scalar (`f32` or `f64`); the aliases at
//! the crate root fix it to `f64`, which is what the catalog is checked in.

pub mod algebra;
pub mod approx;
pub mod catalog;
pub mod code;
pub mod geom;
mod hull;
pub mod optimize;
pub mod scalar;
pub mod voronoi;

pub use algebra::{compensated_eval, poly_eval, refine_root, verify_pair, AlgebraError, IntPolynomial};
pub use approx::{approx_radius, suggested_height, ApproxError};
pub use catalog::{build_code, catalog_entry, cross_check_table, verify_entry, CatalogError};
pub use code::CodeError;
pub use geom::{angular_distance, cap_from_angular, cap_from_height, GeomError};
pub use optimize::{ConvergeOptions, SymmetryScheme};
pub use scalar::Real;
pub use voronoi::{covering_radius, mesh, VoronoiError};

pub type UnitVector3 = geom::UnitVector3<f64>;
pub type CapGeometry = geom::CapGeometry<f64>;
pub type Rotation = geom::Rotation<f64>;
pub type SphericalCode = code::SphericalCode<f64>;
pub type VoronoiMesh = voronoi::VoronoiMesh<f64>;
pub type MeshVertex = voronoi::MeshVertex<f64>;
pub type CoveringResult = voronoi::CoveringResult<f64>;
pub type PlaneFit = optimize::PlaneFit<f64>;
pub type ConvergeResult = optimize::ConvergeResult<f64>;
pub type RootApprox = algebra::RootApprox<f64>;
