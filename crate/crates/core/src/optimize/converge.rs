//! The converge iteration: mesh, average height, per-cap plane fit, projection
//! back onto the symmetry scheme.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use super::plane::{fit_plane, FitError};
use super::scheme::{SchemeError, SymmetryScheme};
use crate::code::SphericalCode;
use crate::geom::{rot3, UnitVector3};
use crate::scalar::{add, dot, scale, sub, Real};
use crate::voronoi::{cell_centroid, covering_radius, mesh, tangent_frame, CoveringResult, MeshVertex, VoronoiError, VoronoiMesh};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StepError {
    #[error("mesh: {0}")]
    Mesh(#[from] VoronoiError),
    #[error("plane fit for cap {cap}: {source}")]
    Fit { cap: usize, source: FitError },
    #[error("cap {0} has an empty Voronoi cell")]
    EmptyCell(usize),
    #[error("projection: {0}")]
    Scheme(#[from] SchemeError),
}

#[derive(Debug, Error, Clone, PartialEq)]
#[error("converge failed at iteration {iteration}: {source}")]
pub struct ConvergeError<T: std::fmt::Debug> {
    pub iteration: usize,
    pub source: StepError,
    /// Covering radii recorded before the failure.
    pub history: Vec<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergeOptions<T> {
    pub max_iters: usize,
    /// Stop once successive covering radii differ by less than this (radians).
    pub tol: T,
    /// Cell vertices within this distance (radians) of the covering radius
    /// take part in the plane fit.
    pub active_window: T,
    /// Largest distance (radians) the fitted code may sit from the scheme.
    pub projection_limit: T,
    /// History depth of Anderson mixing; 0 runs the plain iteration.
    pub anderson_depth: usize,
}

impl<T: Real> Default for ConvergeOptions<T> {
    fn default() -> Self {
        Self {
            max_iters: 500,
            tol: T::lit(1e-12),
            active_window: T::lit(0.02),
            projection_limit: T::lit(0.2),
            anderson_depth: 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Step<T> {
    pub code: SphericalCode<T>,
    /// Average height of the input code's mesh.
    pub height: T,
    pub params: Vec<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergeResult<T> {
    /// Best code seen.
    pub code: SphericalCode<T>,
    pub covering: CoveringResult<T>,
    pub params: Vec<T>,
    pub iterations: usize,
    pub converged: bool,
    pub initial_radius: T,
    /// Covering radius after each iteration.
    pub history: Vec<T>,
}

impl<T: Real> ConvergeResult<T> {
    /// Cap height of the best code, cos of its covering radius.
    pub fn height(&self) -> T {
        self.covering.cap.height()
    }
}

/// Mean over caps of the mean height of each cell's vertices seen from its
/// own cap (rotated so the cap sits at +z).
pub fn average_height<T: Real>(code: &SphericalCode<T>, mesh: &VoronoiMesh<T>) -> Result<T, StepError> {
    let z = UnitVector3::z_axis();
    let mut total = T::zero();
    for (i, cap) in code.points().iter().enumerate() {
        let cell = mesh.cell(i);
        if cell.is_empty() {
            return Err(StepError::EmptyCell(i));
        }
        let r = rot3(cap, &z);
        let s = cell.iter().fold(T::zero(), |s, &v| s + r.apply(&mesh.vertex(v).position).z());
        total = total + s / T::lit(cell.len() as f64);
    }
    Ok(total / T::lit(code.len() as f64))
}

/// New direction for one cap from its active cell vertices.
fn refit<T: Real>(cap: usize, old: &UnitVector3<T>, active: &[[T; 3]]) -> Result<UnitVector3<T>, StepError> {
    match active.len() {
        0 | 1 => Ok(*old),
        2 => {
            // The equidistant great circle of the two points: move the cap
            // to its nearest point there.
            let d = sub(active[0], active[1]);
            let v = old.to_array();
            let w = sub(v, scale(d, dot(v, d) / dot(d, d)));
            Ok(UnitVector3::from_direction(w).unwrap_or(*old))
        }
        _ => {
            let pts: Vec<UnitVector3<T>> = active.iter().map(|a| UnitVector3::from_direction(*a).expect("mesh vertices are unit")).collect();
            let c = cell_centroid(&pts)?;
            let fit = fit_plane(active, c).map_err(|source| StepError::Fit { cap, source })?;
            Ok(if fit.normal.dot(old) < T::zero() { -fit.normal } else { fit.normal })
        }
    }
}

/// Smallest vertex radius taking part in the plane fits.
///
/// Normally everything within `window` of the covering radius. Once the top
/// vertices agree to `EQUALIZED`, give every cap at least three, and a gap
/// far wider than their spread separates them from the rest, only they count:
/// at a converged code the vertices below the gap are not tight and must not
/// pull the caps.
fn active_floor<T: Real>(m: &VoronoiMesh<T>, window: T) -> T {
    let top = m.max_vertex_radius();
    let mut order: Vec<&MeshVertex<T>> = m.vertices().iter().filter(|v| v.radius >= top - window).collect();
    order.sort_by(|a, b| b.radius.partial_cmp(&a.radius).unwrap());
    let mut touched = vec![0usize; m.cells().len()];
    for k in 1..order.len() {
        let above = order[k - 1].radius;
        let spread = top - above;
        if spread > T::lit(EQUALIZED) {
            break;
        }
        for &c in &order[k - 1].caps {
            touched[c] += 1;
        }
        let gap = above - order[k].radius;
        if gap > T::lit(EQUALIZED) && gap > T::lit(GAP_RATIO) * spread && touched.iter().all(|&t| t >= 3) {
            return above;
        }
    }
    top - window
}

const EQUALIZED: f64 = 1e-8;
const GAP_RATIO: f64 = 1e3;

/// Plane-fit update of every cap, before projection onto a scheme.
fn fitted<T: Real>(code: &SphericalCode<T>, m: &VoronoiMesh<T>, window: T) -> Result<Vec<UnitVector3<T>>, StepError> {
    let floor = active_floor(m, window);
    (0..code.len())
        .map(|k| {
            let active: Vec<[T; 3]> = m
                .cell(k)
                .iter()
                .map(|&v| m.vertex(v))
                .filter(|v| v.radius >= floor)
                .map(|v| v.position.to_array())
                .collect();
            refit(k, code.point(k), &active)
        })
        .collect()
}

/// One pass of the converge loop.
pub fn converge_step<T: Real>(code: &SphericalCode<T>, scheme: &SymmetryScheme, opts: &ConvergeOptions<T>) -> Result<Step<T>, StepError> {
    let m = mesh(code)?;
    let height = average_height(code, &m)?;
    let w = fitted(code, &m, opts.active_window)?;
    let w = SphericalCode::new(w).map_err(|e| StepError::Scheme(SchemeError::Code(e)))?;
    let (params, code) = scheme.project(&w, opts.projection_limit)?;
    Ok(Step { code, height, params })
}

fn flatten<T: Real>(c: &SphericalCode<T>) -> Vec<T> {
    c.points().iter().flat_map(|p| p.to_array()).collect()
}

fn unflatten<T: Real>(x: &[T], scheme: &SymmetryScheme, limit: T) -> Option<SphericalCode<T>> {
    let pts: Option<Vec<_>> = x.chunks(3).map(|c| UnitVector3::from_direction([c[0], c[1], c[2]]).ok()).collect();
    let code = SphericalCode::new(pts?).ok()?;
    scheme.project(&code, limit).ok().map(|(_, c)| c)
}

/// Solves the small regularized normal equations of Anderson mixing.
fn anderson_coefficients<T: Real>(df: &[Vec<T>], f: &[T]) -> Option<Vec<T>> {
    let m = df.len();
    let mut a = vec![vec![T::zero(); m + 1]; m];
    let mut scale_sq = T::zero();
    for i in 0..m {
        for j in 0..m {
            a[i][j] = df[i].iter().zip(&df[j]).fold(T::zero(), |s, (&x, &y)| s + x * y);
        }
        a[i][m] = df[i].iter().zip(f).fold(T::zero(), |s, (&x, &y)| s + x * y);
        scale_sq = scale_sq.max(a[i][i]);
    }
    let reg = scale_sq * T::lit(1e-12);
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = row[i] + reg;
    }
    for col in 0..m {
        let piv = (col..m).max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())?;
        if a[piv][col].abs() <= T::min_positive_value() {
            return None;
        }
        a.swap(col, piv);
        for r in 0..m {
            if r != col {
                let k = a[r][col] / a[col][col];
                for c in col..=m {
                    let v = a[col][c];
                    a[r][c] = a[r][c] - k * v;
                }
            }
        }
    }
    let g: Vec<T> = (0..m).map(|i| a[i][m] / a[i][i]).collect();
    g.iter().all(|x| x.is_finite()).then_some(g)
}

/// Iterates `converge_step` until successive covering radii agree to `tol`.
///
/// Iterates are mixed (Anderson) on the flattened coordinates and projected
/// back onto the scheme; a rejected mix falls back to the plain step. The best
/// code seen is returned, not the last.
pub fn run_converge<T: Real>(
    code: &SphericalCode<T>,
    scheme: &SymmetryScheme,
    opts: &ConvergeOptions<T>,
) -> Result<ConvergeResult<T>, ConvergeError<T>> {
    let fail = |iteration, source, history: &Vec<T>| ConvergeError { iteration, source, history: history.clone() };
    let mut history = Vec::new();
    let start = covering_radius(code).map_err(|e| fail(0, e.into(), &history))?;
    let initial_radius = start.angular_radius();
    let start_params = scheme.project(code, T::infinity()).map(|(p, _)| p).unwrap_or_default();
    let mut best = (initial_radius, code.clone(), start, start_params);

    let mut x = code.clone();
    let mut prev = initial_radius;
    let mut xs: Vec<Vec<T>> = Vec::new();
    let mut gs: Vec<Vec<T>> = Vec::new();
    let mut converged = false;
    let mut iterations = 0;

    for it in 1..=opts.max_iters {
        iterations = it;
        let step = converge_step(&x, scheme, opts).map_err(|e| fail(it, e, &history))?;
        let g = flatten(&step.code);
        let mut next = step.code;

        if opts.anderson_depth > 0 {
            xs.push(flatten(&x));
            gs.push(g.clone());
            if xs.len() > opts.anderson_depth + 1 {
                xs.remove(0);
                gs.remove(0);
            }
            if let Some(mixed) = anderson_mix(&xs, &gs).and_then(|v| unflatten(&v, scheme, opts.projection_limit)) {
                next = mixed;
            }
        }

        let cov = match covering_radius(&next) {
            Ok(c) => c,
            Err(e) => return Err(fail(it, e.into(), &history)),
        };
        let r = cov.angular_radius();
        history.push(r);
        let params = scheme.project(&next, T::infinity()).map(|(p, _)| p).unwrap_or_default();
        if r < best.0 {
            best = (r, next.clone(), cov, params);
        } else if r > best.0 + T::lit(0.05) {
            // Mixing wandered off: restart plain from the best code.
            next = best.1.clone();
            xs.clear();
            gs.clear();
        }
        if (r - prev).abs() < opts.tol {
            converged = true;
            break;
        }
        prev = r;
        x = next;
    }

    let (_, code, covering, params) = best;
    Ok(ConvergeResult { code, covering, params, iterations, converged, initial_radius, history })
}

fn anderson_mix<T: Real>(xs: &[Vec<T>], gs: &[Vec<T>]) -> Option<Vec<T>> {
    let k = xs.len();
    if k < 2 {
        return None;
    }
    let f: Vec<Vec<T>> = xs.iter().zip(gs).map(|(x, g)| g.iter().zip(x).map(|(&a, &b)| a - b).collect()).collect();
    let df: Vec<Vec<T>> = (0..k - 1).map(|i| f[i + 1].iter().zip(&f[i]).map(|(&a, &b)| a - b).collect()).collect();
    let dg: Vec<Vec<T>> = (0..k - 1).map(|i| gs[i + 1].iter().zip(&gs[i]).map(|(&a, &b)| a - b).collect()).collect();
    let gamma = anderson_coefficients(&df, &f[k - 1])?;
    let mut out = gs[k - 1].clone();
    for (j, gj) in gamma.iter().enumerate() {
        for (o, d) in out.iter_mut().zip(&dg[j]) {
            *o = *o - *gj * *d;
        }
    }
    Some(out)
}

/// Moves every cap by exactly `magnitude` radians in a random tangent
/// direction drawn from a ChaCha stream seeded with `seed`.
pub fn perturb<T: Real>(code: &SphericalCode<T>, magnitude: T, seed: u64) -> SphericalCode<T> {
    if magnitude == T::zero() {
        return code.clone();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (s, c) = magnitude.sin_cos();
    let pts = code
        .points()
        .iter()
        .map(|p| {
            let psi = T::lit(rng.gen::<f64>() * std::f64::consts::TAU);
            let (e1, e2) = tangent_frame(p.to_array());
            let t = add(scale(e1, psi.cos()), scale(e2, psi.sin()));
            UnitVector3::from_direction(add(scale(p.to_array(), c), scale(t, s))).expect("unit combination")
        })
        .collect();
    // Two caps landing within 1e-9 rad of each other is astronomically
    // unlikely; keep the original code then rather than failing.
    SphericalCode::new(pts).unwrap_or_else(|_| code.clone())
}

/// One start of a multi-start run.
#[derive(Debug, Clone)]
pub struct StartOutcome<T: std::fmt::Debug> {
    pub seed: u64,
    pub result: Result<ConvergeResult<T>, ConvergeError<T>>,
}

/// Perturbs `code` once per seed and converges each start independently.
/// Outcomes are ordered by (covering radius, seed), failures last, so the
/// order does not depend on thread scheduling.
pub fn multi_start<T: Real>(
    code: &SphericalCode<T>,
    scheme: &SymmetryScheme,
    magnitude: T,
    seeds: &[u64],
    opts: &ConvergeOptions<T>,
) -> Vec<StartOutcome<T>> {
    let mut out: Vec<StartOutcome<T>> = seeds
        .par_iter()
        .map(|&seed| StartOutcome { seed, result: run_converge(&perturb(code, magnitude, seed), scheme, opts) })
        .collect();
    let key = |o: &StartOutcome<T>| o.result.as_ref().map(|r| r.covering.angular_radius().as_f64()).unwrap_or(f64::INFINITY);
    out.sort_by(|a, b| key(a).partial_cmp(&key(b)).unwrap().then(a.seed.cmp(&b.seed)));
    out
}
