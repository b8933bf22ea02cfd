//! Point-set files: one `[a:b:c:d]` per line, `#` starts a comment.

use std::path::Path;

use crate::error::{Error, Result};
use crate::exact::GaussianRational;
use crate::geometry::ProjPoint;

/// Serializes points in the file format, one per line.
pub fn dump_points(points: &[ProjPoint], title: &str) -> String {
    let mut out = format!("# {title}\n# {} points, coordinates [x:y:z:w]\n", points.len());
    for (k, p) in points.iter().enumerate() {
        out.push_str(&format!("{p}  # P{}\n", k + 1));
    }
    out
}

/// Parses one line; `Ok(None)` for blank and comment lines. Errors carry a
/// 1-based column.
fn parse_line(line: &str) -> std::result::Result<Option<ProjPoint>, (usize, String)> {
    let body = line.split('#').next().unwrap_or("");
    let Some(start) = body.find(|c: char| !c.is_whitespace()) else { return Ok(None) };
    if !body[start..].starts_with('[') {
        return Err((start + 1, "expected `[`".into()));
    }
    let close =
        body[start..].find(']').map(|k| start + k).ok_or((body.trim_end().len() + 1, "expected `]`".to_string()))?;
    if let Some(extra) = body[close + 1..].find(|c: char| !c.is_whitespace()) {
        return Err((close + 2 + extra, "unexpected text after the point".into()));
    }
    let mut coords = Vec::with_capacity(4);
    let mut offset = start + 1;
    for part in body[start + 1..close].split(':') {
        let lead = part.len() - part.trim_start().len();
        let q: GaussianRational = part.parse().map_err(|e: Error| (offset + lead + 1, e.to_string()))?;
        coords.push(q);
        offset += part.len() + 1;
    }
    let coords: [GaussianRational; 4] =
        coords.try_into().map_err(|v: Vec<_>| (start + 1, format!("expected 4 coordinates, found {}", v.len())))?;
    ProjPoint::new(coords).map(Some).map_err(|_| (start + 1, "all coordinates are zero".into()))
}

/// Parses point-set text; `origin` names the source in errors.
pub fn parse_pointset(text: &str, origin: &str) -> Result<Vec<ProjPoint>> {
    let err = |line: usize, column: usize, reason: String| Error::PointFile {
        path: origin.to_string(),
        line,
        column,
        reason,
    };
    let mut points: Vec<(ProjPoint, usize)> = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let lineno = k + 1;
        match parse_line(line) {
            Ok(None) => {}
            Ok(Some(p)) => {
                if let Some((_, first)) = points.iter().find(|(q, _)| *q == p) {
                    return Err(err(lineno, 1, format!("duplicate of the point on line {first}")));
                }
                points.push((p, lineno));
            }
            Err((column, reason)) => return Err(err(lineno, column, reason)),
        }
    }
    if points.is_empty() {
        return Err(err(text.lines().count().max(1), 1, "no points".into()));
    }
    Ok(points.into_iter().map(|(p, _)| p).collect())
}

pub fn load_pointset(path: &Path) -> Result<Vec<ProjPoint>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_pointset(&text, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point_file_error(text: &str) -> (usize, usize, String) {
        match parse_pointset(text, "t") {
            Err(Error::PointFile { line, column, reason, .. }) => (line, column, reason),
            other => panic!("expected a point-file error, got {other:?}"),
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let pts = parse_pointset("# header\n\n[1:0:0:0]\n  [0:1:0:0] # second\n", "t").unwrap();
        assert_eq!(pts.len(), 2);
    }

    #[test]
    fn bad_coordinate_column() {
        assert_eq!(point_file_error("[1:x:0:0]").0, 1);
        assert_eq!(point_file_error("[1:x:0:0]").1, 4);
        assert_eq!(point_file_error("\n  [1:2:0]").1, 3);
    }

    #[test]
    fn duplicates_name_both_lines() {
        let (line, _, reason) = point_file_error("[0:0:1:1]\n[1:0:0:0]\n[0:0:2:2]\n");
        assert_eq!(line, 3);
        assert!(reason.contains("line 1"), "{reason}");
    }

    #[test]
    fn empty_file_is_an_error() {
        assert_eq!(point_file_error("# nothing\n").2, "no points");
    }
}
