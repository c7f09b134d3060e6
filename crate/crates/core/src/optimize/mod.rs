//! Local optimization of codes: plane fits, symmetry schemes and the converge
//! iteration with perturbation restarts.

mod converge;
mod plane;
mod scheme;

pub use converge::{
    average_height, converge_step, multi_start, perturb, run_converge, ConvergeError, ConvergeOptions, ConvergeResult,
    StartOutcome, Step, StepError,
};
pub use plane::{fit_plane, symmetric_eigen3, FitError, PlaneFit};
pub use scheme::{gauge_rotation, CapTemplate, Coord, MirrorMap, SchemeError, SymmetryScheme, MANIFOLD_TOLERANCE};

use crate::code::SphericalCode;
use crate::scalar::Real;

pub fn params_to_code<T: Real>(scheme: &SymmetryScheme, params: &[T]) -> Result<SphericalCode<T>, SchemeError> {
    scheme.params_to_code(params)
}

pub fn code_to_params<T: Real>(scheme: &SymmetryScheme, code: &SphericalCode<T>) -> Result<Vec<T>, SchemeError> {
    scheme.code_to_params(code)
}
