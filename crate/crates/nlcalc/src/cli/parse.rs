//! Parsers for CLI argument grammars and the arrangement file format.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::ExactScalar;
use crate::geometry::{line_from_points, FamilyKind, LineArrangement, ProjPoint};

/// Parses an inclusive integer range: either a single value `N` or `LO..HI`.
pub fn parse_range(s: &str) -> Result<(i64, i64)> {
    let s = s.trim();
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: i64 = lo
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid range bound {lo:?}")))?;
        let hi: i64 = hi
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid range bound {hi:?}")))?;
        if lo > hi {
            return Err(Error::Parse(format!(
                "empty range {s:?}: lower bound exceeds upper bound"
            )));
        }
        Ok((lo, hi))
    } else {
        let v: i64 = s
            .parse()
            .map_err(|_| Error::Parse(format!("invalid integer {s:?}")))?;
        Ok((v, v))
    }
}

/// A degree selection: explicit bounds, or `auto` (per-arrangement smallest
/// certified degree, `deg(C) + 4`) as the lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeRange {
    /// `D` or `LO..HI`, both inclusive.
    Explicit(i64, i64),
    /// `auto` (single degree) or `auto..HI`.
    Auto(Option<i64>),
}

impl DegreeRange {
    /// Resolves the range for an arrangement of `degree` lines. `auto` means
    /// `degree + 4`, the smallest degree at which reports can be certified.
    /// The resolved range may be empty, in which case no degrees are swept.
    pub fn resolve(&self, degree: usize) -> (i64, i64) {
        match *self {
            DegreeRange::Explicit(lo, hi) => (lo, hi),
            DegreeRange::Auto(hi) => {
                let lo = degree as i64 + 4;
                (lo, hi.unwrap_or(lo))
            }
        }
    }
}

/// Parses a degree range: `D`, `LO..HI`, `auto`, or `auto..HI`. Explicit
/// bounds must satisfy `4 <= lo <= hi`.
pub fn parse_degree_range(s: &str) -> Result<DegreeRange> {
    let s = s.trim();
    if s == "auto" {
        return Ok(DegreeRange::Auto(None));
    }
    if let Some(hi) = s.strip_prefix("auto..") {
        let hi: i64 = hi
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid range bound {hi:?}")))?;
        return Ok(DegreeRange::Auto(Some(hi)));
    }
    let (lo, hi) = parse_range(s)?;
    if lo < 4 {
        return Err(Error::Parse(format!(
            "degree bound {lo} is below the minimum degree 4"
        )));
    }
    Ok(DegreeRange::Explicit(lo, hi))
}

/// Parses a comma-separated list of named family kinds. Duplicates are
/// collapsed; order of first occurrence is preserved.
pub fn parse_families(s: &str) -> Result<Vec<FamilyKind>> {
    let mut kinds = Vec::new();
    for name in s.split(',') {
        let kind = match name.trim() {
            "generic" => FamilyKind::Generic,
            "coplanar" => FamilyKind::Coplanar,
            "concurrent" => FamilyKind::Concurrent,
            other => {
                return Err(Error::Parse(format!(
                    "unknown family {other:?} (expected generic, coplanar, or concurrent)"
                )))
            }
        };
        if !kinds.contains(&kind) {
            kinds.push(kind);
        }
    }
    if kinds.is_empty() {
        return Err(Error::Parse("empty family list".into()));
    }
    Ok(kinds)
}

/// Parses one named family kind (for `--family`).
pub fn parse_family(s: &str) -> Result<FamilyKind> {
    let kinds = parse_families(s)?;
    if kinds.len() != 1 {
        return Err(Error::Parse(format!("expected a single family, got {s:?}")));
    }
    Ok(kinds[0])
}

fn parse_scalar(s: &str, line_no: usize) -> Result<ExactScalar> {
    let bad = || Error::Parse(format!("line {line_no}: invalid number {s:?}"));
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::Parse(format!(
                "line {line_no}: zero denominator in {s:?}"
            )));
        }
        Ok(BigRational::new(num, den))
    } else {
        let num: BigInt = s.parse().map_err(|_| bad())?;
        Ok(BigRational::from_integer(num))
    }
}

fn parse_point(s: &str, line_no: usize) -> Result<ProjPoint> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(Error::Parse(format!(
            "line {line_no}: expected 4 comma-separated coordinates, got {}",
            parts.len()
        )));
    }
    let mut coords = Vec::with_capacity(4);
    for part in parts {
        coords.push(parse_scalar(part, line_no)?);
    }
    ProjPoint::new([
        coords[0].clone(),
        coords[1].clone(),
        coords[2].clone(),
        coords[3].clone(),
    ])
    .map_err(|_| Error::Parse(format!("line {line_no}: zero point")))
}

/// Parses an arrangement file. One geometric line per text line:
///
/// ```text
/// # comment
/// P = 1, 0, 0, 0 ; Q = 0, 1, 0, 0
/// P = 1/2, 0, 1, 0 ; Q = 0, 0, 0, 1
/// ```
///
/// Each coordinate is an integer or `num/den` rational. Blank lines and `#`
/// comments are ignored. Duplicate lines and degenerate spans are rejected.
pub fn parse_arrangement(text: &str) -> Result<LineArrangement> {
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (p_part, q_part) = content.split_once(';').ok_or_else(|| {
            Error::Parse(format!(
                "line {line_no}: expected \"P = a,b,c,d ; Q = e,f,g,h\""
            ))
        })?;
        let p_coords = p_part
            .trim()
            .strip_prefix("P")
            .and_then(|rest| rest.trim_start().strip_prefix('='));
        let q_coords = q_part
            .trim()
            .strip_prefix("Q")
            .and_then(|rest| rest.trim_start().strip_prefix('='));
        let (Some(p_coords), Some(q_coords)) = (p_coords, q_coords) else {
            return Err(Error::Parse(format!(
                "line {line_no}: expected \"P = a,b,c,d ; Q = e,f,g,h\""
            )));
        };
        let p = parse_point(p_coords, line_no)?;
        let q = parse_point(q_coords, line_no)?;
        let line = line_from_points(&p, &q).map_err(|_| {
            Error::Parse(format!(
                "line {line_no}: the two points coincide and span no line"
            ))
        })?;
        lines.push(line);
    }
    if lines.is_empty() {
        return Err(Error::Parse("no lines found in arrangement file".into()));
    }
    LineArrangement::new(lines)
        .map_err(|_| Error::Parse("arrangement contains duplicate lines".into()))
}
