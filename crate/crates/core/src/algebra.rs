//! Integer polynomials, root refinement and the height/radius pair check.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::scalar::Real;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("leading coefficient is zero")]
    ZeroLeading,
    #[error("no root within 1e-3 of {x0}")]
    NoRootNearby { x0: f64 },
    #[error("root {value} leaves relative residual {relative:e} above {tol:e}")]
    ResidualTooLarge { value: f64, relative: f64, tol: f64 },
}

/// Integer-coefficient polynomial, highest degree first.
///
/// Coefficients are `i64`; the largest in the catalog is 137851392.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<i64>) -> Result<Self, AlgebraError> {
        if coeffs.first().is_none_or(|&c| c == 0) {
            return Err(AlgebraError::ZeroLeading);
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Value and derivative by Horner's scheme.
    pub fn eval_with_derivative<T: Real>(&self, x: T) -> (T, T) {
        let mut p = T::zero();
        let mut dp = T::zero();
        for &c in &self.coeffs {
            dp = dp * x + p;
            p = p * x + T::lit(c as f64);
        }
        (p, dp)
    }

    /// `sum |c_i| |x|^i`, the scale of rounding error in `poly_eval`.
    pub fn magnitude<T: Real>(&self, x: T) -> T {
        let ax = x.abs();
        self.coeffs.iter().fold(T::zero(), |s, &c| s * ax + T::lit((c as f64).abs()))
    }

    /// `sum i |c_i| |x|^(i-1)`.
    pub fn derivative_magnitude<T: Real>(&self, x: T) -> T {
        let ax = x.abs();
        let d = self.degree();
        self.coeffs[..d]
            .iter()
            .enumerate()
            .fold(T::zero(), |s, (k, &c)| s * ax + T::lit(((d - k) as f64) * (c as f64).abs()))
    }
}

impl FromStr for IntPolynomial {
    type Err = AlgebraError;

    /// Parses sums of terms like `16x^8 - 72x^6 + 9`, `x^10`, `-3x`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(AlgebraError::Parse("empty".into()));
        }
        let bad = || AlgebraError::Parse(s.to_string());
        let mut terms: Vec<(usize, i64)> = Vec::new();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1i64, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let (coef, power) = match term.find('x') {
                None => (term.parse::<i64>().map_err(|_| bad())?, 0usize),
                Some(i) => {
                    let c = if i == 0 { 1 } else { term[..i].trim_end_matches('*').parse::<i64>().map_err(|_| bad())? };
                    let e = &term[i + 1..];
                    let p = if e.is_empty() { 1 } else { e.strip_prefix('^').ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())? };
                    (c, p)
                }
            };
            terms.push((power, sign * coef));
        }
        let deg = terms.iter().map(|t| t.0).max().ok_or_else(bad)?;
        let mut coeffs = vec![0i64; deg + 1];
        for (p, c) in terms {
            coeffs[deg - p] += c;
        }
        Self::new(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let p = d - k;
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (a, p) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "x^{p}")?,
                (_, 1) => write!(f, "{a}x")?,
                _ => write!(f, "{a}x^{p}")?,
            }
        }
        Ok(())
    }
}

impl serde::Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Horner evaluation.
pub fn poly_eval<T: Real>(p: &IntPolynomial, x: T) -> T {
    p.eval_with_derivative(x).0
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootApprox<T> {
    pub polynomial: IntPolynomial,
    pub value: T,
    /// `|p(value)|`.
    pub residual: T,
    /// `residual / sum |c_i| |value|^i`.
    pub relative_residual: T,
    /// Derivative bounded away from zero at `value`.
    pub simple: bool,
}

const BRACKET_STEP: f64 = 1e-5;
const BRACKET_REACH: f64 = 1e-3;

/// Finds the root of `p` near `x0`: expanding sign-change search in 1e-5 steps
/// out to 1e-3, then Newton safeguarded by bisection. Without a sign change a
/// plain Newton iteration is tried inside the same 1e-3 window.
pub fn refine_root<T: Real>(p: &IntPolynomial, x0: T, tol: T) -> Result<RootApprox<T>, AlgebraError> {
    let f = |x: T| poly_eval(p, x);
    let fx0 = f(x0);
    let step = T::lit(BRACKET_STEP);
    let reach = T::lit(BRACKET_REACH);

    let mut bracket = None;
    if fx0 != T::zero() {
        let steps = (BRACKET_REACH / BRACKET_STEP).round() as usize;
        let (mut left, mut right) = (x0, x0);
        for k in 1..=steps {
            let r = x0 + step * T::lit(k as f64);
            if f(r).signum() != fx0.signum() {
                bracket = Some((right, r));
                break;
            }
            right = r;
            let l = x0 - step * T::lit(k as f64);
            if f(l).signum() != fx0.signum() {
                bracket = Some((l, left));
                break;
            }
            left = l;
        }
    }

    let value = match (fx0 == T::zero(), bracket) {
        (true, _) => x0,
        (false, Some((lo, hi))) => newton_bisect(p, lo, hi),
        (false, None) => {
            let mut x = x0;
            let mut ok = false;
            for _ in 0..100 {
                let (v, d) = p.eval_with_derivative(x);
                if d == T::zero() || !d.is_finite() {
                    break;
                }
                let nx = x - v / d;
                if (nx - x0).abs() > reach || !nx.is_finite() {
                    break;
                }
                let done = (nx - x).abs() <= T::epsilon() * T::lit(4.0) * nx.abs().max(T::one());
                x = nx;
                if done {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return Err(AlgebraError::NoRootNearby { x0: x0.as_f64() });
            }
            x
        }
    };

    let value = polish(p, value);
    let (v, d) = p.eval_with_derivative(value);
    let mag = p.magnitude(value).max(T::min_positive_value());
    let relative = v.abs() / mag;
    if relative > tol {
        return Err(AlgebraError::ResidualTooLarge { value: value.as_f64(), relative: relative.as_f64(), tol: tol.as_f64() });
    }
    let dscale = p.derivative_magnitude(value);
    Ok(RootApprox {
        polynomial: p.clone(),
        value,
        residual: v.abs(),
        relative_residual: relative,
        simple: d.abs() > T::lit(1e-6) * dscale,
    })
}

/// Horner with error-free transformations: about twice the working precision.
pub fn compensated_eval<T: Real>(p: &IntPolynomial, x: T) -> T {
    let (mut s, mut c) = (T::zero(), T::zero());
    for &k in p.coeffs() {
        let prod = s * x;
        let pe = s.mul_add(x, -prod);
        let sum = prod + T::lit(k as f64);
        let bb = sum - prod;
        let se = (prod - (sum - bb)) + (T::lit(k as f64) - bb);
        s = sum;
        c = c * x + (pe + se);
    }
    s + c
}

/// Moves a root by a few ulps to the float with the smallest accurate
/// residual; plain Horner cannot tell neighbours apart there.
fn polish<T: Real>(p: &IntPolynomial, x: T) -> T {
    let half = x.abs().max(T::min_positive_value()) * T::epsilon() / T::lit(2.0);
    let mut best = (compensated_eval(p, x).abs(), x);
    for k in [-4.0, -3.0, -2.0, -1.0, 1.0, 2.0, 3.0, 4.0] {
        let c = x + half * T::lit(k);
        let r = compensated_eval(p, c).abs();
        if r < best.0 {
            best = (r, c);
        }
    }
    best.1
}

fn newton_bisect<T: Real>(p: &IntPolynomial, mut lo: T, mut hi: T) -> T {
    let flo = poly_eval(p, lo);
    let mut x = (lo + hi) / T::lit(2.0);
    let mut best = (T::infinity(), x);
    for _ in 0..200 {
        let (v, d) = p.eval_with_derivative(x);
        if v.abs() < best.0 {
            best = (v.abs(), x);
        }
        if v == T::zero() {
            return x;
        }
        if v.signum() == flo.signum() {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - v / d;
        let nx = if d != T::zero() && newton > lo && newton < hi { newton } else { (lo + hi) / T::lit(2.0) };
        let tiny = T::epsilon() * T::lit(2.0) * nx.abs().max(T::min_positive_value());
        if (nx - x).abs() <= tiny || (hi - lo) <= tiny {
            let v = poly_eval(p, nx).abs();
            return if v < best.0 { nx } else { best.1 };
        }
        x = nx;
    }
    best.1
}

/// Why a height/radius pair was rejected.
#[derive(Debug, Clone, PartialEq)]
pub enum PairFailure {
    OutOfRange,
    HeightNotRoot(AlgebraError),
    RadiusNotRoot(AlgebraError),
    /// `|h^2 + r^2 - 1|` of the refined values.
    PythagoreanDefect(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairVerification {
    pub holds: bool,
    pub failure: Option<PairFailure>,
    pub height: Option<f64>,
    pub radius: Option<f64>,
}

/// True when `h` and `r` refine to roots of their polynomials and satisfy
/// `h^2 + r^2 = 1` within 1e-10.
pub fn verify_pair(height_poly: &IntPolynomial, radius_poly: &IntPolynomial, h: f64, r: f64) -> PairVerification {
    let reject = |failure, height, radius| PairVerification { holds: false, failure: Some(failure), height, radius };
    if !(0.0..=1.0).contains(&h) || !(0.0..=1.0).contains(&r) {
        return reject(PairFailure::OutOfRange, None, None);
    }
    let hh = match refine_root(height_poly, h, 1e-12) {
        Ok(x) => x.value,
        Err(e) => return reject(PairFailure::HeightNotRoot(e), None, None),
    };
    let rr = match refine_root(radius_poly, r, 1e-12) {
        Ok(x) => x.value,
        Err(e) => return reject(PairFailure::RadiusNotRoot(e), Some(hh), None),
    };
    let defect = (hh * hh + rr * rr - 1.0).abs();
    if defect > 1e-10 {
        return reject(PairFailure::PythagoreanDefect(defect), Some(hh), Some(rr));
    }
    PairVerification { holds: true, failure: None, height: Some(hh), radius: Some(rr) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p: IntPolynomial = "x^10 - 62x^9 + 340881".parse().unwrap();
        assert_eq!(p.degree(), 10);
        assert_eq!(p.coeffs()[1], -62);
        assert_eq!(p.to_string(), "x^10 - 62x^9 + 340881");
        let q: IntPolynomial = "3x - 1".parse().unwrap();
        assert_eq!(q.coeffs(), &[3, -1]);
        assert!("2y + 1".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn derivative_by_horner() {
        let p: IntPolynomial = "x^3 - 2x".parse().unwrap();
        assert_eq!(p.eval_with_derivative(2.0), (4.0, 10.0));
    }
}
