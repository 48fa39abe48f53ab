//! The point-set file format: one point per line as `x y`, where each
//! coordinate is an exact fraction `p/q` or a decimal literal. `#` starts a
//! comment, blank lines are ignored. Writing always emits reduced exact
//! fractions, so write-then-read is bit-exact.

use thiserror::Error;
use voriter_core::rational::{format_rational, parse_rational, ParseRationalError};
use voriter_core::{Point, PointSet};

#[derive(Debug, Error)]
pub enum PointFileError {
    #[error("line {line}: expected `x y`, got `{content}`")]
    Malformed { line: usize, content: String },
    #[error("line {line}: {source}")]
    BadNumber {
        line: usize,
        #[source]
        source: ParseRationalError,
    },
}

/// Parse result plus how many duplicate points were dropped.
#[derive(Debug)]
pub struct ParsedPoints {
    pub set: PointSet,
    pub duplicates: usize,
}

pub fn parse_points(text: &str) -> Result<ParsedPoints, PointFileError> {
    let mut points: Vec<Point> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(xs), Some(ys), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(PointFileError::Malformed {
                line: line_no,
                content: line.to_string(),
            });
        };
        let x = parse_rational(xs).map_err(|source| PointFileError::BadNumber {
            line: line_no,
            source,
        })?;
        let y = parse_rational(ys).map_err(|source| PointFileError::BadNumber {
            line: line_no,
            source,
        })?;
        points.push(Point::new(x, y));
    }
    let raw_count = points.len();
    let set = PointSet::new(points);
    Ok(ParsedPoints {
        duplicates: raw_count - set.len(),
        set,
    })
}

/// Canonical text form: points in canonical order, exact fractions.
pub fn write_points(set: &PointSet) -> String {
    let mut out = String::new();
    for p in set.iter() {
        out.push_str(&format_rational(&p.x));
        out.push(' ');
        out.push_str(&format_rational(&p.y));
        out.push('\n');
    }
    out
}
