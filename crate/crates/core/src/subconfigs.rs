//! The 24-point subconfiguration with its 18 lines, the degree-4 cone
//! property, the residual grid, and the planar collinearities in w = 0.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, GaussianRational};
use crate::geometry::{ProjLine, ProjPoint};
use crate::geproci::{self, disjoint_covers, verify_geproci, CIcertificate, CurveSource, GridStructure, LineCover};
use crate::interpolation::{self, condition_orders, fatpoint_conditions, FatPointSpec, Location};
use crate::klein::{self, collinear_histogram, collinear_structure, data, KleinConfiguration};
use crate::sampling::{self, Avoid};

type Q = GaussianRational;

/// A named subset of the 60 points (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetSpec {
    pub name: String,
    pub indices: Vec<usize>,
}

impl SubsetSpec {
    pub fn new(name: &str, indices: Vec<usize>) -> Result<Self> {
        let mut sorted = indices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != indices.len() || sorted.iter().any(|&i| i >= data::POINTS.len()) {
            return Err(Error::Construction(format!("subset {name} has repeated or invalid indices")));
        }
        Ok(SubsetSpec { name: name.to_string(), indices })
    }

    pub fn z24() -> Self {
        SubsetSpec::new("Z24", data::indices(&data::Z24)).expect("valid table")
    }

    /// The 12 planar points in w = 0.
    pub fn planar_f12() -> Self {
        SubsetSpec::new("planar_F12", data::indices(&data::PLANAR_F12)).expect("valid table")
    }

    pub fn points(&self, config: &KleinConfiguration) -> Vec<ProjPoint> {
        self.indices.iter().map(|&i| config.points[i].clone()).collect()
    }

    /// The complementary subset.
    pub fn complement(&self) -> SubsetSpec {
        let indices = (0..data::POINTS.len()).filter(|i| !self.indices.contains(i)).collect();
        SubsetSpec { name: format!("complement of {}", self.name), indices }
    }
}

#[derive(Clone, Debug)]
pub struct Z24Structure {
    pub points: Vec<usize>,
    /// Klein lines carrying four points of the subset (0-based).
    pub lines: Vec<usize>,
    /// Cover letters of each of those lines, derived from cover membership.
    pub labels: Vec<(usize, String)>,
    pub labels_match: bool,
    pub max_on_klein_line: usize,
    pub collinear: BTreeMap<usize, usize>,
    /// Covers of the subset by six of the lines.
    pub covers: Vec<LineCover>,
}

pub fn z24_structure(config: &KleinConfiguration) -> Result<Z24Structure> {
    let subset = SubsetSpec::z24();
    let on_line: Vec<Vec<usize>> = config
        .line_points
        .iter()
        .map(|ps| ps.iter().copied().filter(|p| subset.indices.contains(p)).collect())
        .collect();
    let max_on_klein_line = on_line.iter().map(Vec::len).max().unwrap_or(0);
    let lines: Vec<usize> = (0..on_line.len()).filter(|&l| on_line[l].len() >= 4).collect();
    for &l in &lines {
        if on_line[l].len() != 4 {
            return Err(Error::Construction(format!("line {} carries {} of the 24 points", l + 1, on_line[l].len())));
        }
    }
    for &p in &subset.indices {
        let n = lines.iter().filter(|&&l| on_line[l].contains(&p)).count();
        if n != 3 {
            return Err(Error::Construction(format!("point {} lies on {n} of the 18 lines", p + 1)));
        }
    }
    let expected: Vec<usize> = data::L18.iter().map(|(l, _)| l - 1).collect();
    if lines != expected {
        return Err(Error::Construction("the four-point lines differ from the tabulated 18".into()));
    }
    let labels: Vec<(usize, String)> =
        lines.iter().map(|&l| (l, geproci::families_of(l).into_iter().collect())).collect();
    let labels_match = labels.iter().zip(data::L18).all(|((_, got), (_, want))| got == want);

    let pts = subset.points(config);
    let collinear = collinear_histogram(&collinear_structure(&pts));
    let line_objs: Vec<ProjLine> = lines.iter().map(|&l| config.lines[l].clone()).collect();
    let covers = disjoint_covers(&line_objs, &pts, 6)
        .into_iter()
        .map(|c| {
            let ls: Vec<usize> = c.lines.iter().map(|&i| lines[i]).collect();
            LineCover { label: geproci::label_cover(&ls), lines: ls }
        })
        .collect();
    Ok(Z24Structure { points: subset.indices, lines, labels, labels_match, max_on_klein_line, collinear, covers })
}

/// Whether some removal of whole cover lines leaves exactly the 24 points.
pub fn z24_in_removal_chains(config: &KleinConfiguration) -> bool {
    let target = SubsetSpec::z24().indices;
    geproci::table_covers().iter().any(|cover| {
        (0..=cover.lines.len()).any(|k| {
            let removed = &cover.lines[..k];
            let rest: Vec<usize> = (0..config.points.len())
                .filter(|p| removed.iter().all(|&l| !config.line_points[l].contains(p)))
                .collect();
            rest == target
        })
    })
}

/// A degree-4 cone through the 24 points with vertex at a seeded point.
#[derive(Clone, Debug)]
pub struct C4Run {
    pub seed: u64,
    pub vertex: ProjPoint,
    pub rank: usize,
    pub actual: usize,
    pub expected: usize,
    /// Every order-3 partial of the kernel element vanishes at the vertex.
    pub cone_verified: bool,
}

impl C4Run {
    pub fn unexpected(&self) -> bool {
        self.actual > self.expected && self.cone_verified
    }
}

#[derive(Clone, Debug)]
pub struct C4Certificate {
    /// Dimension of quartics through the 24 points.
    pub quartic_dimension: usize,
    pub runs: Vec<C4Run>,
    /// Plane complete intersections of type (4,6) with the interpolated quartic.
    pub plane: Vec<CIcertificate>,
}

pub fn verify_c4(config: &KleinConfiguration, seed: u64) -> Result<C4Certificate> {
    let subset = SubsetSpec::z24();
    let pts = subset.points(config);
    let basis = interpolation::forms_through(&pts, 4).basis;
    let mut avoid = Avoid { coordinate_planes: true, points: config.points.clone(), ..Default::default() };
    avoid.lines = config.lines.clone();
    let family_a: Vec<ProjLine> = data::indices(&data::L18_FAMILY_A).iter().map(|&l| config.lines[l].clone()).collect();
    let mut runs = Vec::new();
    let mut plane = Vec::new();
    for k in 0..interpolation::SPECIALIZATION_COUNT as u64 {
        let s = sampling::stream_seed(seed, k);
        let vertex = sampling::general_points(&mut sampling::rng(s), 1, &avoid)?.remove(0);
        let spec = FatPointSpec::new(Location::Point(vertex.clone()), 4);
        let ExactMatrix::Scalar(m) = fatpoint_conditions(&basis, &spec)? else { unreachable!("point location") };
        let rk = m.rank_kernel();
        let cone_verified = rk.kernel.first().is_some_and(|v| {
            let f = basis
                .iter()
                .zip(v)
                .fold(crate::exact::MultiPoly::zero(crate::exact::VariableContext::XYZW), |acc, (g, c)| {
                    acc.add(&g.scale(c))
                });
            !f.is_zero()
                && pts.iter().all(|p| p.lies_on(&f).unwrap_or(false))
                && condition_orders(4)
                    .iter()
                    .all(|o| f.partial_multi(o).evaluate(vertex.coords()).map(|x| x.is_zero()).unwrap_or(false))
        });
        runs.push(C4Run {
            seed: s,
            vertex,
            rank: rk.rank,
            actual: rk.kernel.len(),
            expected: basis.len().saturating_sub(spec.condition_count()),
            cone_verified,
        });
        plane.push(verify_geproci(&pts, &family_a, &CurveSource::Interpolate(4), s)?);
    }
    Ok(C4Certificate { quartic_dimension: basis.len(), runs, plane })
}

/// The (6,6)-grid formed by the points outside the 24.
pub fn residual_grid(config: &KleinConfiguration) -> Result<GridStructure> {
    let residual = SubsetSpec::z24().complement();
    let pts = residual.points(config);
    let [r1, r2] = data::RESIDUAL_RULINGS.map(|r| data::indices(&r));
    let lines = |ids: &[usize]| -> Vec<ProjLine> { ids.iter().map(|&l| config.lines[l].clone()).collect() };
    geproci::verify_grid(&pts, &lines(&r1), &lines(&r2))?;
    let found = geproci::grid_check(&pts).ok_or_else(|| Error::Identity("grid search found no grid".into()))?;
    let as_klein = |sets: &[klein::CollinearSet]| -> Vec<usize> {
        let mut v: Vec<usize> = sets.iter().filter_map(|s| config.lines.iter().position(|l| *l == s.line)).collect();
        v.sort_unstable();
        v
    };
    let mut got = [as_klein(&found.rulings[0]), as_klein(&found.rulings[1])];
    got.sort();
    let mut want = [r1, r2];
    want.sort();
    if got != want {
        return Err(Error::Identity("grid search found rulings other than the tabulated ones".into()));
    }
    Ok(found)
}

/// Collinearities of the 12 planar points.
#[derive(Clone, Debug, PartialEq)]
pub struct CollinearityCertificate {
    /// Points of the configuration in the plane w = 0 (0-based).
    pub plane_points: Vec<usize>,
    pub triples: Vec<[usize; 3]>,
    pub quadruples: Vec<[usize; 4]>,
    pub pairs_checked: usize,
    /// Every pair spans a line through a third point of the set.
    pub all_pairs_covered: bool,
}

fn collinear_all(pts: &[&ProjPoint]) -> bool {
    match pts {
        [a, b, rest @ ..] => rest.iter().all(|c| ProjPoint::collinear(a, b, c)),
        _ => true,
    }
}

pub fn real_premise(config: &KleinConfiguration) -> Result<CollinearityCertificate> {
    let w0 = crate::geometry::ProjPlane::new([Q::zero(), Q::zero(), Q::zero(), Q::one()])?;
    let plane_points: Vec<usize> = (0..config.points.len()).filter(|&p| w0.contains(&config.points[p])).collect();
    for &[a, b, c] in &data::PLANAR_TRIPLES {
        if !collinear_all(&[&config.points[a - 1], &config.points[b - 1], &config.points[c - 1]]) {
            return Err(Error::Identity(format!("points {a}, {b}, {c} are not collinear")));
        }
    }
    for q in &data::PLANAR_QUADRUPLES {
        let pts: Vec<&ProjPoint> = q.iter().map(|&i| &config.points[i - 1]).collect();
        if !collinear_all(&pts) {
            return Err(Error::Identity(format!("points {q:?} are not collinear")));
        }
    }
    let f12 = SubsetSpec::planar_f12().points(config);
    let mut pairs_checked = 0;
    let mut all_pairs_covered = true;
    for i in 0..f12.len() {
        for j in i + 1..f12.len() {
            pairs_checked += 1;
            let third = (0..f12.len()).any(|k| k != i && k != j && ProjPoint::collinear(&f12[i], &f12[j], &f12[k]));
            all_pairs_covered &= third;
        }
    }
    Ok(CollinearityCertificate {
        plane_points,
        triples: data::PLANAR_TRIPLES.to_vec(),
        quadruples: data::PLANAR_QUADRUPLES.to_vec(),
        pairs_checked,
        all_pairs_covered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_rejects_repeats() {
        assert!(SubsetSpec::new("bad", vec![1, 1]).is_err());
        assert!(SubsetSpec::new("bad", vec![60]).is_err());
        assert_eq!(SubsetSpec::z24().complement().indices.len(), 36);
    }

    #[test]
    fn planar_triple_9_17_23() {
        let pts = klein::klein_points();
        assert!(ProjPoint::collinear(&pts[8], &pts[16], &pts[22]));
    }
}
