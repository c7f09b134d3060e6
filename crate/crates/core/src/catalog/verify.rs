use serde::Serialize;

use super::{all_entries, build_code, CatalogEntry, CatalogError, Recipe, Status};
use crate::algebra::refine_root;
use crate::code::SphericalCode;
use crate::geom::{Rotation, UnitVector3};
use crate::optimize::{fit_plane, MirrorMap};
use crate::voronoi::{cell_centroid, covering_radius, mesh};

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub measured: f64,
    pub limit: f64,
    pub detail: String,
}

impl Check {
    fn within(name: &str, measured: f64, limit: f64, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed: measured <= limit, measured, limit, detail: detail.into() }
    }

    fn failed(name: &str, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed: false, measured: f64::NAN, limit: f64::NAN, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub status: Status,
    pub computed_degrees: Option<f64>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Largest plane-fit deviation over the cells of a full-rank code.
pub(crate) fn max_cell_deviation(code: &SphericalCode<f64>) -> Result<f64, String> {
    let m = mesh(code).map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for k in 0..code.len() {
        let pts = m.cell_points(k);
        let c = cell_centroid(&pts).map_err(|e| e.to_string())?;
        let arr: Vec<[f64; 3]> = pts.iter().map(UnitVector3::to_array).collect();
        let fit = fit_plane(&arr, c).map_err(|e| format!("cap {}: {e}", k + 1))?;
        worst = worst.max(fit.max_deviation);
    }
    Ok(worst)
}

/// Largest distance from an image cap to its nearest cap.
fn mirror_defect(code: &SphericalCode<f64>, map: MirrorMap) -> f64 {
    let pts = code.points();
    let image_defect = |flip: &dyn Fn(&UnitVector3<f64>) -> UnitVector3<f64>| {
        pts.iter()
            .map(|p| {
                let q = flip(p);
                pts.iter().map(|r| crate::geom::angular_distance(&q, r)).fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    let flip_z = |p: &UnitVector3<f64>| UnitVector3::from_direction([p.x(), p.y(), -p.z()]).expect("unit");
    match map {
        MirrorMap::Turn(deg) => {
            let r = Rotation::about_z(deg.to_radians());
            image_defect(&|p| r.apply(&flip_z(p)))
        }
        MirrorMap::Reflect => {
            // The vertical mirror plane takes cap 1 to some cap at the
            // opposite height; try each.
            let p0 = pts[0];
            let phi0 = p0.y().atan2(p0.x());
            pts.iter()
                .filter(|q| (q.z() + p0.z()).abs() < 1e-9)
                .map(|q| {
                    let alpha = 0.5 * (phi0 + q.y().atan2(q.x()));
                    let (s, c) = (2.0 * alpha).sin_cos();
                    image_defect(&|p| UnitVector3::from_direction([c * p.x() + s * p.y(), s * p.x() - c * p.y(), -p.z()]).expect("unit"))
                })
                .fold(f64::INFINITY, f64::min)
        }
    }
}

/// Runs every check on an entry. Failures are report lines, not errors.
pub fn verify_entry(entry: &CatalogEntry, tol: f64) -> VerificationReport {
    let mut checks = Vec::new();
    let report = |checks: Vec<Check>, computed| VerificationReport { n: entry.n, status: entry.status, computed_degrees: computed, checks };

    let mut poly_worst: f64 = 0.0;
    let mut poly_errors = Vec::new();
    let values = entry.parameters.iter().chain(entry.stated_height.iter()).chain(entry.stated_radius.iter());
    let mut poly_count = 0;
    for v in values {
        if let Some(p) = &v.polynomial {
            poly_count += 1;
            match refine_root(p, v.value, 1e-12) {
                Ok(r) => poly_worst = poly_worst.max(r.relative_residual),
                Err(e) => poly_errors.push(format!("{}: {e}", v.name)),
            }
        }
    }
    if poly_count > 0 {
        checks.push(if poly_errors.is_empty() {
            Check::within("polynomial-residuals", poly_worst, 1e-12, format!("{poly_count} polynomial values"))
        } else {
            Check::failed("polynomial-residuals", poly_errors.join("; "))
        });
    }

    let code = match build_code(entry) {
        Ok(c) => c,
        Err(e) => {
            checks.push(Check::failed("construction", e.to_string()));
            return report(checks, None);
        }
    };

    let raw: Vec<[f64; 3]> = match entry.recipe {
        Recipe::Coordinates(f) => {
            let params: Vec<f64> = entry.parameters.iter().map(|p| p.refined().unwrap_or(p.value)).collect();
            f(&params)
        }
        Recipe::Scheme => code.coords(),
    };
    let norm_dev = raw.iter().map(|v| ((v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt() - 1.0).abs()).fold(0.0, f64::max);
    let norm_limit = tol.max(entry.digits_tolerance().min(1e-12));
    checks.push(Check::within("unit-norms", norm_dev, norm_limit, "largest |norm - 1| before normalization"));

    let sep = code.min_separation();
    checks.push(Check { name: "distinct".into(), passed: sep > 1e-6, measured: sep, limit: 1e-6, detail: "smallest pairwise separation (rad)".into() });

    let cov = match covering_radius(&code) {
        Ok(c) => c,
        Err(e) => {
            checks.push(Check::failed("covering-radius", e.to_string()));
            return report(checks, None);
        }
    };
    let deg = cov.degrees();
    let theta = cov.angular_radius();
    checks.push(Check::within(
        "recorded-radius",
        (deg - entry.recorded_degrees).abs(),
        entry.provenance.radius_tolerance_deg(),
        format!("computed {deg:.10} vs recorded {:.10} degrees", entry.recorded_degrees),
    ));

    if let (Some(h), Some(r)) = (&entry.stated_height, &entry.stated_radius) {
        let hv = h.refined().unwrap_or(h.value);
        let rv = r.refined().unwrap_or(r.value);
        checks.push(Check::within("stated-height", (theta.cos() - hv).abs(), tol, format!("cos of covering angle vs {}", h.source)));
        checks.push(Check::within("stated-radius", (theta.sin() - rv).abs(), tol, format!("sin of covering angle vs {}", r.source)));
        checks.push(Check::within("pythagorean", (hv * hv + rv * rv - 1.0).abs(), tol.max(entry.digits_tolerance()), "h^2 + r^2 - 1"));
    }

    if let Ok(m) = mesh(&code) {
        let min_inc = m.vertices().iter().map(|v| v.caps.len()).min().unwrap_or(0);
        checks.push(Check {
            name: "incidence".into(),
            passed: min_inc >= 3,
            measured: min_inc as f64,
            limit: 3.0,
            detail: "fewest caps meeting at a Voronoi vertex".into(),
        });
        if entry.n != 19 {
            checks.push(match max_cell_deviation(&code) {
                Ok(d) => Check::within("coplanarity", d, tol.max(1e-12), "largest plane-fit deviation of a cell's vertices"),
                Err(e) => Check::failed("coplanarity", e),
            });
        }
    }

    if let Some(map) = entry.scheme().mirror() {
        checks.push(Check::within("mirror", mirror_defect(&code, map), tol, format!("{map:?} image distance (rad)")));
    }

    report(checks, Some(deg))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossCheckRow {
    pub n: usize,
    pub reference_degrees: Option<f64>,
    pub computed_degrees: f64,
    pub recorded_degrees: f64,
    pub status: Status,
}

/// Computed radius beside the reference and recorded columns, one row per
/// catalog size.
pub fn cross_check_table() -> Result<Vec<CrossCheckRow>, CatalogError> {
    all_entries()
        .iter()
        .map(|e| {
            let code = build_code(e)?;
            let cov = covering_radius(&code).map_err(|source| CatalogError::Covering { n: e.n, source })?;
            Ok(CrossCheckRow { n: e.n, reference_degrees: e.reference_degrees, computed_degrees: cov.degrees(), recorded_degrees: e.recorded_degrees, status: e.status })
        })
        .collect()
}
