//! Code files: Sloane's one-number-per-line layout, plain `x y z` rows, JSON,
//! and OFF geometry for viewers.

use std::fmt::Write as _;

use capcover::voronoi::delaunay;
use capcover::{CodeError, SphericalCode, UnitVector3};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest norm defect a parsed point may have before it is rejected.
pub const NORM_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Sloane,
    Xyz,
    Json,
    /// Write only.
    Off,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Code(#[from] CodeError),
    #[error("OFF is an output format")]
    WriteOnly,
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line { line, message: message.into() }
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonCode {
    #[serde(default)]
    n: Option<usize>,
    #[serde(alias = "coordinates")]
    points: Vec<[f64; 3]>,
}

/// Data lines with their 1-based numbers; blank lines and `#` comments are
/// skipped.
fn data_lines(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i, l.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect()))
        .collect()
}

fn number(line: usize, tok: &str) -> Result<f64, ParseError> {
    match tok.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(at(line, format!("not a number: {tok:?}"))),
    }
}

fn unit(line: usize, v: [f64; 3]) -> Result<UnitVector3, ParseError> {
    let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if (norm - 1.0).abs() > NORM_TOLERANCE {
        return Err(at(line, format!("norm {norm} is not within {NORM_TOLERANCE:e} of 1")));
    }
    UnitVector3::from_direction(v).map_err(|e| at(line, e.to_string()))
}

/// Guesses the layout: JSON by its leading bracket, Sloane when every data
/// line holds a single number, `x y z` rows otherwise.
pub fn detect(text: &str) -> Format {
    let t = text.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Format::Json;
    }
    let lines = data_lines(text);
    if !lines.is_empty() && lines.iter().all(|(_, toks)| toks.len() == 1) {
        Format::Sloane
    } else {
        Format::Xyz
    }
}

pub fn parse_code_file(text: &str, hint: Option<Format>) -> Result<SphericalCode, ParseError> {
    let points = match hint.unwrap_or_else(|| detect(text)) {
        Format::Sloane => parse_sloane(text)?,
        Format::Xyz => parse_xyz(text)?,
        Format::Json => parse_json(text)?,
        Format::Off => return Err(ParseError::WriteOnly),
    };
    Ok(SphericalCode::new(points)?)
}

fn parse_sloane(text: &str) -> Result<Vec<UnitVector3>, ParseError> {
    let mut toks = Vec::new();
    for (line, words) in data_lines(text) {
        for w in words {
            toks.push((line, number(line, w)?));
        }
    }
    if toks.len() % 3 != 0 {
        let line = toks.last().map_or(0, |t| t.0);
        return Err(at(line, format!("{} numbers do not form (x, y, z) triples", toks.len())));
    }
    toks.chunks(3).map(|c| unit(c[0].0, [c[0].1, c[1].1, c[2].1])).collect()
}

fn parse_xyz(text: &str) -> Result<Vec<UnitVector3>, ParseError> {
    data_lines(text)
        .into_iter()
        .map(|(line, words)| {
            if words.len() != 3 {
                return Err(at(line, format!("expected 3 numbers, found {}", words.len())));
            }
            unit(line, [number(line, words[0])?, number(line, words[1])?, number(line, words[2])?])
        })
        .collect()
}

fn parse_json(text: &str) -> Result<Vec<UnitVector3>, ParseError> {
    let json_err = |e: serde_json::Error| at(e.line(), e.to_string());
    let points: Vec<[f64; 3]> = if text.trim_start().starts_with('[') {
        serde_json::from_str(text).map_err(json_err)?
    } else {
        let doc: JsonCode = serde_json::from_str(text).map_err(json_err)?;
        if let Some(n) = doc.n {
            if n != doc.points.len() {
                return Err(at(1, format!("n is {n} but {} points are listed", doc.points.len())));
            }
        }
        doc.points
    };
    // JSON carries no per-point line numbers; report the point's position.
    points.iter().enumerate().map(|(i, p)| unit(i + 1, *p)).collect()
}

/// `x` with 17 significant digits, trailing zeros dropped.
pub fn fmt17(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.16e}");
    let (mant, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mant) = mant.strip_prefix('-').map_or(("", mant), |m| ("-", m));
    let digits: String = mant.chars().filter(|c| *c != '.').collect();
    let body = if (-5..17).contains(&exp) {
        if exp < 0 {
            format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
        } else {
            let split = exp as usize + 1;
            format!("{}.{}", &digits[..split], &digits[split..])
        }
    } else {
        let trimmed = digits[1..].trim_end_matches('0');
        return if trimmed.is_empty() { format!("{sign}{}e{exp}", &digits[..1]) } else { format!("{sign}{}.{trimmed}e{exp}", &digits[..1]) };
    };
    let body = body.trim_end_matches('0').trim_end_matches('.');
    format!("{sign}{body}")
}

pub fn write_code(code: &SphericalCode, format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Sloane => {
            for p in code.points() {
                for c in p.to_array() {
                    writeln!(s, "{}", fmt17(c)).unwrap();
                }
            }
        }
        Format::Xyz => {
            for p in code.points() {
                let [x, y, z] = p.to_array();
                writeln!(s, "{} {} {}", fmt17(x), fmt17(y), fmt17(z)).unwrap();
            }
        }
        Format::Json => {
            let doc = JsonCode { n: Some(code.len()), points: code.coords() };
            s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
            s.push('\n');
        }
        Format::Off => s = write_off(code),
    }
    s
}

/// Cap centers as vertices and the Delaunay triangles as faces. Codes on one
/// great circle have no triangulation and get no faces.
pub fn write_off(code: &SphericalCode) -> String {
    let faces = delaunay(code).unwrap_or_default();
    let mut s = format!("OFF\n{} {} 0\n", code.len(), faces.len());
    for p in code.points() {
        let [x, y, z] = p.to_array();
        writeln!(s, "{} {} {}", fmt17(x), fmt17(y), fmt17(z)).unwrap();
    }
    for f in faces {
        writeln!(s, "3 {} {} {}", f[0], f[1], f[2]).unwrap();
    }
    s
}

pub const CIRCLE_SEGMENTS: usize = 64;

/// Boundary circle of every cap at angular radius `theta` as a closed
/// polyline of `CIRCLE_SEGMENTS` segments; blocks are separated by a blank
/// line.
pub fn write_circles(code: &SphericalCode, theta: f64) -> String {
    let (s_t, c_t) = theta.sin_cos();
    let mut s = String::new();
    for (i, p) in code.points().iter().enumerate() {
        let c = p.to_array();
        let seed = if c[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
        let d = seed[0] * c[0] + seed[1] * c[1] + seed[2] * c[2];
        let e1 = UnitVector3::from_direction([seed[0] - d * c[0], seed[1] - d * c[1], seed[2] - d * c[2]]).expect("seed is not parallel").to_array();
        let e2 = p.cross(&UnitVector3::from_array(e1).expect("unit"));
        writeln!(s, "# cap {}", i + 1).unwrap();
        for k in 0..=CIRCLE_SEGMENTS {
            let phi = std::f64::consts::TAU * (k % CIRCLE_SEGMENTS) as f64 / CIRCLE_SEGMENTS as f64;
            let (sp, cp) = phi.sin_cos();
            let q: Vec<String> = (0..3).map(|j| fmt17(c_t * c[j] + s_t * (cp * e1[j] + sp * e2[j]))).collect();
            writeln!(s, "{}", q.join(" ")).unwrap();
        }
        s.push('\n');
    }
    s
}
