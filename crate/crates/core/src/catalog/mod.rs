//! Known coverings as executable data.
//!
//! Each entry keeps the source's parameters verbatim (decimal strings plus an
//! optional minimal polynomial), the stated height and radius, and either a
//! symmetry scheme or an explicit coordinate recipe to rebuild the code.

mod data;
mod verify;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{refine_root, AlgebraError, IntPolynomial};
use crate::code::{CodeError, SphericalCode};
use crate::optimize::{SchemeError, SymmetryScheme};
use crate::voronoi::VoronoiError;

pub use verify::{cross_check_table, verify_entry, Check, CrossCheckRow, VerificationReport};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("no catalog entry for {0} caps")]
    NotInCatalog(usize),
    #[error("{n} caps, parameter {name}: {source}")]
    Root { n: usize, name: String, source: AlgebraError },
    #[error("{n} caps: {source}")]
    Scheme { n: usize, source: SchemeError },
    #[error("{n} caps: {source}")]
    Code { n: usize, source: CodeError },
    #[error("{n} caps: {source}")]
    Covering { n: usize, source: VoronoiError },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    PutativeGlobal,
    /// Marked with a dagger in the cross-check table.
    LocalMinimum,
    /// Marked with an asterisk: the reference value differs.
    NeedsInvestigation,
    /// Marked with a diamond: lower than the reference value.
    NewLowerValue,
    Unresolved,
}

impl Status {
    /// The cross-check table's footnote marker.
    pub fn marker(self) -> &'static str {
        match self {
            Status::PutativeGlobal | Status::Unresolved => "",
            Status::LocalMinimum => "†",
            Status::NeedsInvestigation => "*",
            Status::NewLowerValue => "⋄",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::PutativeGlobal => "putative-global",
            Status::LocalMinimum => "local-minimum",
            Status::NeedsInvestigation => "needs-investigation",
            Status::NewLowerValue => "new-lower-value",
            Status::Unresolved => "unresolved",
        }
    }
}

/// How the source gives the configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ClosedForm,
    Polynomial,
    Decimal,
    CoordinateTable,
    /// Produced by this crate's optimizer and frozen.
    Numeric,
}

impl Provenance {
    /// Agreement required between the computed and recorded radius, degrees.
    pub fn radius_tolerance_deg(self) -> f64 {
        match self {
            Provenance::ClosedForm | Provenance::Polynomial => 5e-9,
            _ => 1e-8,
        }
    }
}

/// A number as printed: its text, its 64-bit value and, when given, a
/// polynomial it is a root of.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Value {
    pub name: String,
    pub source: String,
    pub value: f64,
    pub polynomial: Option<IntPolynomial>,
}

impl Value {
    /// The value, refined to a root of its polynomial when it has one.
    pub fn refined(&self) -> Result<f64, AlgebraError> {
        match &self.polynomial {
            Some(p) => refine_root(p, self.value, 1e-12).map(|r| r.value),
            None => Ok(self.value),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Recipe {
    /// Parameters feed the entry's symmetry scheme in order.
    Scheme,
    /// Explicit coordinates from the (refined) parameters.
    Coordinates(fn(&[f64]) -> Vec<[f64; 3]>),
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub n: usize,
    pub status: Status,
    pub provenance: Provenance,
    pub parameters: Vec<Value>,
    pub scheme_id: String,
    pub stated_height: Option<Value>,
    pub stated_radius: Option<Value>,
    /// Digits the source prints for its decimals.
    pub source_digits: usize,
    /// The source's own covering radius in degrees.
    pub recorded_degrees: f64,
    /// The independent reference radius in degrees, when listed.
    pub reference_degrees: Option<f64>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub(crate) recipe: Recipe,
}

impl CatalogEntry {
    pub fn scheme(&self) -> SymmetryScheme {
        SymmetryScheme::by_id(&self.scheme_id, self.n).expect("catalog scheme ids are valid")
    }

    /// Tolerance implied by the printed digits, floored at 64-bit precision.
    pub fn digits_tolerance(&self) -> f64 {
        10f64.powi(2 - self.source_digits.min(17) as i32).max(1e-15)
    }
}

/// Catalog sizes, ascending.
pub const CATALOG_SIZES: [usize; 23] = [2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 22, 32, 38, 42];

pub fn catalog_entry(n: usize) -> Result<CatalogEntry, CatalogError> {
    data::entry(n).ok_or(CatalogError::NotInCatalog(n))
}

pub fn all_entries() -> Vec<CatalogEntry> {
    CATALOG_SIZES.iter().map(|&n| data::entry(n).expect("listed sizes exist")).collect()
}

/// Builds the code, refining polynomial parameters to full precision first.
pub fn build_code(entry: &CatalogEntry) -> Result<SphericalCode<f64>, CatalogError> {
    let n = entry.n;
    let params = entry
        .parameters
        .iter()
        .map(|p| p.refined().map_err(|source| CatalogError::Root { n, name: p.name.clone(), source }))
        .collect::<Result<Vec<_>, _>>()?;
    match entry.recipe {
        Recipe::Scheme => entry.scheme().params_to_code(&params).map_err(|source| CatalogError::Scheme { n, source }),
        Recipe::Coordinates(f) => SphericalCode::from_coords(&f(&params)).map_err(|source| CatalogError::Code { n, source }),
    }
}
