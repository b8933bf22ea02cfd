//! The Klein configuration: 60 points, 30 lines, 10 quadrics and the 60
//! dual planes, with every incidence computed by exact evaluation.

pub mod data;

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{MultiPoly, VariableContext};
use crate::geometry::{ProjLine, ProjPlane, ProjPoint};

/// The configuration with all incidence tables (0-based indices).
#[derive(Clone, Debug)]
pub struct KleinConfiguration {
    pub points: Vec<ProjPoint>,
    pub lines: Vec<ProjLine>,
    pub quadrics: Vec<MultiPoly>,
    pub planes: Vec<ProjPlane>,
    /// For each line, the points on it.
    pub line_points: Vec<Vec<usize>>,
    /// For each point, the lines through it.
    pub point_lines: Vec<Vec<usize>>,
    /// For each line, the quadrics containing it.
    pub line_quadrics: Vec<Vec<usize>>,
    /// For each quadric, the lines on it.
    pub quadric_lines: Vec<Vec<usize>>,
    /// For each plane, the points on it.
    pub plane_points: Vec<Vec<usize>>,
}

pub fn parse_points(labels: &[&str]) -> Result<Vec<ProjPoint>> {
    labels.iter().map(|s| s.parse()).collect()
}

pub fn klein_points() -> Vec<ProjPoint> {
    parse_points(&data::POINTS).expect("point table parses")
}

pub fn klein_lines() -> Vec<ProjLine> {
    let ctx = VariableContext::XYZW;
    data::LINES
        .iter()
        .map(|(f, g)| {
            let f = MultiPoly::parse(ctx, f).expect("line table parses");
            let g = MultiPoly::parse(ctx, g).expect("line table parses");
            ProjLine::from_polys(&f, &g).expect("independent forms")
        })
        .collect()
}

pub fn klein_quadrics() -> Vec<MultiPoly> {
    data::QUADRICS.iter().map(|s| MultiPoly::parse(VariableContext::XYZW, s).expect("quadric table parses")).collect()
}

pub fn sextic_generators() -> Vec<MultiPoly> {
    data::GENERATORS
        .iter()
        .map(|s| MultiPoly::parse(VariableContext::XYZW, s).expect("generator table parses"))
        .collect()
}

pub fn extra_sextics() -> Vec<MultiPoly> {
    data::EXTRA_SEXTICS
        .iter()
        .map(|s| MultiPoly::parse(VariableContext::XYZW, s).expect("sextic table parses"))
        .collect()
}

/// Whether the line lies on the quadric: a quadric containing three points
/// of a line contains the line.
pub fn line_on_quadric(line: &ProjLine, quadric: &MultiPoly) -> bool {
    let [p, r] = line.spanning_points();
    let mid: Vec<_> = p.coords().iter().zip(r.coords()).map(|(a, b)| a + b).collect();
    [p.coords().to_vec(), r.coords().to_vec(), mid]
        .iter()
        .all(|v| quadric.evaluate(v).map(|x| x.is_zero()).unwrap_or(false))
}

fn check_counts(what: &str, table: &[Vec<usize>], expected: usize) -> Result<()> {
    for (k, row) in table.iter().enumerate() {
        if row.len() != expected {
            return Err(Error::Construction(format!(
                "{what} {} has {} incidences, expected {expected}",
                k + 1,
                row.len()
            )));
        }
    }
    Ok(())
}

/// Builds the configuration from the coordinate tables and verifies every
/// incidence count.
pub fn build_klein() -> Result<KleinConfiguration> {
    let points = klein_points();
    let lines = klein_lines();
    let quadrics = klein_quadrics();
    let planes: Vec<ProjPlane> = points.iter().map(ProjPoint::dual_plane).collect();

    let line_points: Vec<Vec<usize>> =
        lines.iter().map(|l| (0..points.len()).filter(|&p| l.contains(&points[p])).collect()).collect();
    let point_lines = transpose(&line_points, points.len());
    let line_quadrics: Vec<Vec<usize>> =
        lines.iter().map(|l| (0..quadrics.len()).filter(|&q| line_on_quadric(l, &quadrics[q])).collect()).collect();
    let quadric_lines = transpose(&line_quadrics, quadrics.len());
    let plane_points: Vec<Vec<usize>> =
        planes.iter().map(|h| (0..points.len()).filter(|&p| h.contains(&points[p])).collect()).collect();

    check_counts("line", &line_points, 6)?;
    check_counts("point", &point_lines, 3)?;
    check_counts("line", &line_quadrics, 4)?;
    check_counts("quadric", &quadric_lines, 12)?;
    check_counts("plane", &plane_points, 15)?;

    Ok(KleinConfiguration {
        points,
        lines,
        quadrics,
        planes,
        line_points,
        point_lines,
        line_quadrics,
        quadric_lines,
        plane_points,
    })
}

fn transpose(table: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); n];
    for (k, row) in table.iter().enumerate() {
        for &j in row {
            out[j].push(k);
        }
    }
    out
}

/// Point and line multiplicities of a plane arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ArrangementStats {
    /// Number of points lying on exactly `i` planes, for `i >= 3`.
    pub t: BTreeMap<usize, usize>,
    /// Number of lines lying on exactly `j` planes, for `j >= 2`.
    pub t1: BTreeMap<usize, usize>,
}

/// Exhaustive intersection statistics of a plane arrangement.
pub fn arrangement_stats(planes: &[ProjPlane]) -> ArrangementStats {
    let pairs: Vec<(usize, usize)> =
        (0..planes.len()).flat_map(|a| (a + 1..planes.len()).map(move |b| (a, b))).collect();
    let candidates: Vec<ProjLine> = pairs
        .par_iter()
        .map(|&(a, b)| {
            ProjLine::from_forms(planes[a].coeffs().clone(), planes[b].coeffs().clone()).expect("distinct planes")
        })
        .collect();
    let mut lines: HashMap<ProjLine, ()> = HashMap::new();
    let mut unique = Vec::new();
    for l in candidates {
        if lines.insert(l.clone(), ()).is_none() {
            unique.push(l);
        }
    }
    let mut stats = ArrangementStats::default();
    let line_planes: Vec<Vec<usize>> = unique
        .par_iter()
        .map(|l| {
            let [p, r] = l.spanning_points();
            (0..planes.len()).filter(|&h| planes[h].contains(&p) && planes[h].contains(&r)).collect()
        })
        .collect();
    for ps in &line_planes {
        *stats.t1.entry(ps.len()).or_default() += 1;
    }
    // every point on three or more planes is cut from some arrangement line by a further plane
    let hits: Vec<Vec<ProjPoint>> = unique
        .par_iter()
        .zip(&line_planes)
        .map(|(l, on)| (0..planes.len()).filter(|h| !on.contains(h)).filter_map(|h| l.meet_plane(&planes[h])).collect())
        .collect();
    let mut points: HashMap<ProjPoint, ()> = HashMap::new();
    let mut distinct = Vec::new();
    for p in hits.into_iter().flatten() {
        if points.insert(p.clone(), ()).is_none() {
            distinct.push(p);
        }
    }
    let mults: Vec<usize> = distinct.par_iter().map(|p| planes.iter().filter(|h| h.contains(p)).count()).collect();
    for m in mults {
        *stats.t.entry(m).or_default() += 1;
    }
    stats
}

/// Statistics of the 60 dual planes of the configuration.
pub fn incidence_stats(config: &KleinConfiguration) -> ArrangementStats {
    arrangement_stats(&config.planes)
}

/// A line spanned by points of a set, with all set members on it.
#[derive(Clone, Debug)]
pub struct CollinearSet {
    pub line: ProjLine,
    pub points: Vec<usize>,
}

/// Every line spanned by two of the points, with its full incident subset;
/// sorted by decreasing size, then by point indices.
pub fn collinear_structure(points: &[ProjPoint]) -> Vec<CollinearSet> {
    let pairs: Vec<(usize, usize)> =
        (0..points.len()).flat_map(|a| (a + 1..points.len()).map(move |b| (a, b))).collect();
    let spans: Vec<ProjLine> =
        pairs.par_iter().map(|&(a, b)| ProjLine::through(&points[a], &points[b]).expect("distinct points")).collect();
    let mut groups: HashMap<ProjLine, Vec<usize>> = HashMap::new();
    for (l, &(a, b)) in spans.into_iter().zip(&pairs) {
        let e = groups.entry(l).or_default();
        e.push(a);
        e.push(b);
    }
    let mut out: Vec<CollinearSet> = groups
        .into_iter()
        .map(|(line, mut pts)| {
            pts.sort_unstable();
            pts.dedup();
            CollinearSet { line, points: pts }
        })
        .collect();
    out.sort_by(|a, b| b.points.len().cmp(&a.points.len()).then_with(|| a.points.cmp(&b.points)));
    out
}

/// Number of spanned lines by incident-point count.
pub fn collinear_histogram(sets: &[CollinearSet]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for s in sets {
        *h.entry(s.points.len()).or_default() += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_points_span_one_line() {
        let pts = parse_points(&["[1:0:0:0]", "[0:1:0:0]"]).unwrap();
        let s = collinear_structure(&pts);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].points, vec![0, 1]);
    }

    #[test]
    fn lines_through_p25() {
        let config = build_klein().unwrap();
        assert_eq!(config.point_lines[24], vec![27, 28, 29]);
        assert_eq!(config.line_quadrics[0].len(), 4);
    }
}
