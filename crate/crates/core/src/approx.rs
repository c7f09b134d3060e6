//! The fitted rational function r(n) used to seed searches.
//!
//! r(n) evaluates to a cap height: its value at 19 is exactly the printed
//! suggested height, and at 10 it is within 0.002 of cos 42.3078 degrees. The
//! angular radius is therefore arccos r(n).

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ApproxError {
    #[error("r(n) is fitted for 3 <= n <= 150, got {0}")]
    OutOfRange(usize),
}

pub const MIN_N: usize = 3;
pub const MAX_N: usize = 150;

/// Numerator coefficients of n^5 down to n^0; the denominator is n^5.
pub const COEFFICIENTS: [f64; 6] = [1.00185292, -2.67624769, 2.965272834, -43.610276, 217.5695441, -366.876452];

/// r(n) itself.
pub fn fitted_value(n: usize) -> Result<f64, ApproxError> {
    if !(MIN_N..=MAX_N).contains(&n) {
        return Err(ApproxError::OutOfRange(n));
    }
    let x = n as f64;
    let num = COEFFICIENTS.iter().fold(0.0, |acc, &c| acc * x + c);
    Ok(num / x.powi(5))
}

/// Estimated covering radius in radians.
pub fn approx_radius(n: usize) -> Result<f64, ApproxError> {
    fitted_value(n).map(|h| h.clamp(-1.0, 1.0).acos())
}

/// Estimated cap height, cos of `approx_radius`.
pub fn suggested_height(n: usize) -> Result<f64, ApproxError> {
    approx_radius(n).map(f64::cos)
}
