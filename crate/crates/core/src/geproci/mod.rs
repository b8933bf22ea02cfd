//! Projection from a point to the plane, the sextic curve C6, line covers,
//! complete-intersection certificates, grids and removal chains.

mod ci;
mod cover;
mod grid;

use std::collections::BTreeMap;

pub use ci::{interpolate_plane_curve, star_nodes, verify_geproci, CIcertificate, CurveSource, StarCertificate};
pub use cover::{disjoint_covers, label_cover, table_covers, LineCover};
pub use grid::{grid_check, verify_grid, GridStructure};

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Matrix, MultiPoly, Value, Var, VariableContext};
use crate::geometry::{normalize_projective, ProjLine, ProjPoint};
use crate::interpolation;
use crate::klein::{self, collinear_structure, data, KleinConfiguration};

type Q = GaussianRational;

pub type PlanePoint = [Q; 3];
/// Coefficients `(l0, l1, l2)` of `l0 s + l1 t + l2 u`.
pub type PlaneLine = [Q; 3];

const ABCD: VariableContext = VariableContext::ABCD;
const STU: VariableContext = VariableContext::STU;
const STU_ABCD: VariableContext = VariableContext::STU_ABCD;

pub fn cross(a: &[Q; 3], b: &[Q; 3]) -> [Q; 3] {
    [&(&a[1] * &b[2]) - &(&a[2] * &b[1]), &(&a[2] * &b[0]) - &(&a[0] * &b[2]), &(&a[0] * &b[1]) - &(&a[1] * &b[0])]
}

pub(crate) fn normalized3(mut v: [Q; 3]) -> Option<[Q; 3]> {
    normalize_projective(&mut v).ok()?;
    Some(v)
}

/// Coordinates on the plane of lines through the center (a:b:c:d).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chart {
    /// `(ay-bx : bz-cy : cw-dz)`, used by `ProjectionMap`.
    Projection,
    /// `(ay-bx : az-cx : aw-dx)`, in which the sextic C6 is tabulated.
    Pivot,
}

impl Chart {
    /// Rows of the 3x4 matrix of the chart forms, as linear forms in {a,b,c,d}
    /// acting on a point with coordinates `p`.
    fn rows(self, p: &[Q; 4]) -> [[Q; 4]; 3] {
        let [x, y, z, w] = p;
        let o = Q::zero();
        match self {
            Chart::Projection => [
                [y.clone(), -x, o.clone(), o.clone()],
                [o.clone(), z.clone(), -y, o.clone()],
                [o.clone(), o.clone(), w.clone(), -z],
            ],
            Chart::Pivot => [
                [y.clone(), -x, o.clone(), o.clone()],
                [z.clone(), o.clone(), -x, o.clone()],
                [w.clone(), o.clone(), o.clone(), -x],
            ],
        }
    }

    /// The three forms in {x,y,z,w,a,b,c,d}.
    pub fn forms(self) -> [MultiPoly; 3] {
        let src = match self {
            Chart::Projection => ["a*y-b*x", "b*z-c*y", "c*w-d*z"],
            Chart::Pivot => ["a*y-b*x", "a*z-c*x", "a*w-d*x"],
        };
        src.map(|s| MultiPoly::parse(VariableContext::XYZW_ABCD, s).expect("valid form"))
    }
}

/// Image of a point under projection from the general point (a:b:c:d),
/// as three linear forms in {a,b,c,d}.
pub fn symbolic_image(p: &ProjPoint, chart: Chart) -> [MultiPoly; 3] {
    chart.rows(p.coords()).map(|c| MultiPoly::linear(ABCD, &c))
}

fn stu_vars() -> [MultiPoly; 3] {
    [Var::S, Var::T, Var::U].map(|v| MultiPoly::var(STU_ABCD, v).expect("stu variable"))
}

/// Image of a line under projection from (a:b:c:d) in the projection chart:
/// a linear form in {s,t,u} with coefficients in {a,b,c,d}.
pub fn symbolic_line_image(line: &ProjLine) -> MultiPoly {
    let [p, r] = line.spanning_points();
    let (ip, ir) = (symbolic_image(&p, Chart::Projection), symbolic_image(&r, Chart::Projection));
    let coeffs = [
        ip[1].mul(&ir[2]).sub(&ip[2].mul(&ir[1])),
        ip[2].mul(&ir[0]).sub(&ip[0].mul(&ir[2])),
        ip[0].mul(&ir[1]).sub(&ip[1].mul(&ir[0])),
    ];
    coeffs
        .iter()
        .zip(stu_vars())
        .fold(MultiPoly::zero(STU_ABCD), |acc, (c, v)| acc.add(&c.embed(STU_ABCD).expect("abcd embeds").mul(&v)))
}

/// Whether two polynomials agree up to a nonzero factor free of the `outer` variables.
pub fn proportional_over(f: &MultiPoly, g: &MultiPoly, outer: VariableContext, inner: VariableContext) -> Result<bool> {
    let fs: BTreeMap<_, _> = f.split_by(outer, inner)?.into_iter().collect();
    let gs: BTreeMap<_, _> = g.split_by(outer, inner)?.into_iter().collect();
    if fs.is_empty() || !fs.keys().eq(gs.keys()) {
        return Ok(false);
    }
    let m0 = fs.keys().next().expect("nonempty");
    let (f0, g0) = (&fs[m0], &gs[m0]);
    Ok(fs.iter().all(|(m, fm)| fm.mul(g0) == gs[m].mul(f0)))
}

/// Projection from a concrete center.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionMap {
    center: ProjPoint,
}

impl ProjectionMap {
    pub fn new(center: ProjPoint) -> Self {
        ProjectionMap { center }
    }

    pub fn center(&self) -> &ProjPoint {
        &self.center
    }

    /// The 3x4 matrix of the three forms.
    pub fn matrix(&self) -> Matrix<Q> {
        let [a, b, c, d] = self.center.coords();
        let z = Q::zero();
        Matrix::from_rows(
            4,
            vec![
                vec![-b, a.clone(), z.clone(), z.clone()],
                vec![z.clone(), -c, b.clone(), z.clone()],
                vec![z.clone(), z.clone(), -d, c.clone()],
            ],
        )
        .expect("3x4")
    }

    /// The center is the only base point of the three forms.
    pub fn is_regular(&self) -> bool {
        self.matrix().rank() == 3
    }

    pub fn project_point(&self, p: &ProjPoint) -> Result<PlanePoint> {
        let v: [Q; 3] = self.matrix().mul_vec(p.coords()).try_into().expect("three rows");
        normalized3(v).ok_or_else(|| Error::Indeterminate(p.to_string()))
    }

    pub fn project_line(&self, line: &ProjLine) -> Result<PlaneLine> {
        let [p, r] = line.spanning_points();
        let (ip, ir) = (self.project_point(&p), self.project_point(&r));
        let (Ok(ip), Ok(ir)) = (ip, ir) else { return Err(Error::Indeterminate(format!("{line:?}"))) };
        normalized3(cross(&ip, &ir)).ok_or_else(|| Error::Indeterminate(format!("{line:?}")))
    }

    /// Specializes a curve in {s,t,u,a,b,c,d} at the center.
    pub fn specialize(&self, curve: &MultiPoly) -> Result<MultiPoly> {
        let assignment: Vec<(Var, Value)> = [Var::A, Var::B, Var::C, Var::D]
            .into_iter()
            .zip(self.center.coords().iter().cloned().map(Value::Scalar))
            .collect();
        curve.embed(STU_ABCD)?.substitute(STU, &assignment)
    }
}

/// The sextic C6 in the pivot chart, with coefficients in {a,b,c,d}.
pub fn c6_curve() -> MultiPoly {
    let (wrong, right) = data::C6_CORRECTION;
    MultiPoly::parse(STU_ABCD, &data::C6.replace(wrong, right)).expect("curve table parses")
}

/// C6 exactly as tabulated, before the sign correction.
pub fn c6_curve_as_tabulated() -> MultiPoly {
    MultiPoly::parse(STU_ABCD, data::C6).expect("curve table parses")
}

/// Rewrites a curve from the pivot chart into the projection chart, up to
/// a factor in {a,b,c,d}: `(s',t',u') = (bcs, c(at+cs), abu+adt+cds)`.
pub fn pivot_to_projection(curve: &MultiPoly) -> Result<MultiPoly> {
    let sub = |src: &str| Value::Poly(MultiPoly::parse(STU_ABCD, src).expect("valid form"));
    let assignment = vec![(Var::S, sub("b*c*s")), (Var::T, sub("c*(a*t+c*s)")), (Var::U, sub("a*b*u+a*d*t+c*d*s"))];
    curve.embed(STU_ABCD)?.substitute(STU_ABCD, &assignment)
}

/// C6 in the coordinates of `ProjectionMap`.
pub fn c6_projection_curve() -> MultiPoly {
    pivot_to_projection(&c6_curve()).expect("curve lives in {s,t,u,a,b,c,d}")
}

/// Substitutes the symbolic image of each point into the curve; every result
/// must be the zero polynomial. Returns the number of points checked.
pub fn verify_curve_contains_images(curve: &MultiPoly, chart: Chart, points: &[ProjPoint]) -> Result<usize> {
    for (k, p) in points.iter().enumerate() {
        let img = symbolic_image(p, chart);
        let assignment: Vec<(Var, Value)> =
            [Var::S, Var::T, Var::U].into_iter().zip(img.into_iter().map(Value::Poly)).collect();
        if !curve.substitute(ABCD, &assignment)?.is_zero() {
            return Err(Error::Identity(format!("the curve does not contain the image of point {}", k + 1)));
        }
    }
    Ok(points.len())
}

/// The curve pulled back along the chart forms, in {x,y,z,w,a,b,c,d}.
pub fn pullback(curve: &MultiPoly, chart: Chart) -> Result<MultiPoly> {
    let assignment: Vec<(Var, Value)> =
        [Var::S, Var::T, Var::U].into_iter().zip(chart.forms().into_iter().map(Value::Poly)).collect();
    curve.substitute(VariableContext::XYZW_ABCD, &assignment)
}

/// The pulled-back curve divided by the cone polynomial: `pullback(curve) = q * cone`.
/// Returns `q`, which involves only {a,b,c,d}.
pub fn cone_relation(curve: &MultiPoly, chart: Chart, cone: &MultiPoly) -> Result<MultiPoly> {
    let g = pullback(curve, chart)?;
    let q = g
        .div_exact(cone)?
        .ok_or_else(|| Error::Identity("the pulled-back curve is not a multiple of the cone".into()))?;
    match q.split_by(VariableContext::XYZW, ABCD)?.as_slice() {
        [(m, c)] if m.degree() == 0 => Ok(c.clone()),
        _ => Err(Error::Identity(format!("the cofactor `{q}` involves x, y, z or w"))),
    }
}

/// Checks each projected Klein line against the tabulated image, up to a
/// factor in {a,b,c,d}; returns the number matched.
pub fn verify_projected_lines(lines: &[ProjLine]) -> Result<usize> {
    for (k, (l, expected)) in lines.iter().zip(data::PROJECTED_LINES).enumerate() {
        let expected = MultiPoly::parse(STU_ABCD, expected)?;
        if !proportional_over(&symbolic_line_image(l), &expected, STU, ABCD)? {
            return Err(Error::Identity(format!("projected line {} differs from its tabulated form", k + 1)));
        }
    }
    Ok(lines.len())
}

/// Removal order for the chain: the lines of cover A (1-based).
pub const DEFAULT_REMOVAL_ORDER: [usize; 10] = [1, 13, 18, 23, 26, 12, 15, 20, 25, 30];

/// Outcome of removing the points of the first `k` lines of a cover.
#[derive(Clone, Debug)]
pub struct ChainReport {
    pub k: usize,
    /// Removed lines (0-based Klein indices), in removal order.
    pub removed: Vec<usize>,
    pub remaining_lines: Vec<usize>,
    /// Surviving points (0-based).
    pub points: Vec<usize>,
    /// Collinear subsets with at least four points, by size; each entry is
    /// the Klein line index when the subset spans a Klein line.
    pub rich_lines: BTreeMap<usize, Vec<Option<usize>>>,
    pub certificates: Vec<CIcertificate>,
    pub grid: Option<GridStructure>,
}

impl ChainReport {
    pub fn lines_with(&self, count: usize) -> &[Option<usize>] {
        self.rich_lines.get(&count).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn geproci(&self) -> bool {
        !self.certificates.is_empty() && self.certificates.iter().all(CIcertificate::passed)
    }
}

/// Removes the points of `order[..k]` from the 60 points and certifies the rest.
/// `order` lists 0-based line indices of a disjoint cover.
pub fn removal_chain(config: &KleinConfiguration, order: &[usize], k: usize, seeds: &[u64]) -> Result<ChainReport> {
    if k > order.len() {
        return Err(Error::Dimension(format!("cannot remove {k} of {} lines", order.len())));
    }
    let removed = order[..k].to_vec();
    let remaining_lines = order[k..].to_vec();
    let points: Vec<usize> =
        (0..config.points.len()).filter(|p| removed.iter().all(|&l| !config.line_points[l].contains(p))).collect();
    let pts: Vec<ProjPoint> = points.iter().map(|&p| config.points[p].clone()).collect();

    let mut rich_lines: BTreeMap<usize, Vec<Option<usize>>> = BTreeMap::new();
    for set in collinear_structure(&pts).into_iter().filter(|s| s.points.len() >= 4) {
        let idx = config.lines.iter().position(|l| *l == set.line);
        rich_lines.entry(set.points.len()).or_default().push(idx);
    }

    let mut certificates = Vec::new();
    if !remaining_lines.is_empty() && k < order.len() {
        let cover: Vec<ProjLine> = remaining_lines.iter().map(|&l| config.lines[l].clone()).collect();
        let source = CurveSource::Symbolic(c6_projection_curve());
        if k <= 6 {
            for &seed in seeds {
                certificates.push(verify_geproci(&pts, &cover, &source, seed)?);
            }
        }
    }
    let grid = grid_check(&pts);
    Ok(ChainReport { k, removed, remaining_lines, points, rich_lines, certificates, grid })
}

/// Letters of the tabulated covers containing a line (0-based index).
pub fn families_of(line: usize) -> Vec<char> {
    data::COVERS.iter().filter(|(_, ls)| ls.contains(&(line + 1))).map(|(c, _)| *c).collect()
}

/// Lines of a cover as Klein lines.
pub fn cover_lines(config: &KleinConfiguration, cover: &LineCover) -> Vec<ProjLine> {
    cover.lines.iter().map(|&l| config.lines[l].clone()).collect()
}

/// The symbolic containment of the 60 images in C6, in both charts.
pub fn c6_contains_klein_images() -> Result<usize> {
    let points = klein::klein_points();
    verify_curve_contains_images(&c6_curve(), Chart::Pivot, &points)?;
    verify_curve_contains_images(&c6_projection_curve(), Chart::Projection, &points)
}

/// The cofactor relating C6 (pivot chart) to the cone.
pub fn c6_cone_relation() -> Result<MultiPoly> {
    cone_relation(&c6_curve(), Chart::Pivot, &interpolation::cone_f())
}

/// Covers tried per type by [`find_geproci`].
pub const MAX_COVERS_PER_TYPE: usize = 16;

/// A complete-intersection certificate found for an arbitrary point set.
#[derive(Clone, Debug)]
pub struct PointsetGeproci {
    pub curve_degree: u32,
    /// The cover, as lines spanned by the points with their incident points.
    pub cover: Vec<klein::CollinearSet>,
    /// One certificate per seed, all passing.
    pub certificates: Vec<CIcertificate>,
}

/// Types `(d, n/d)` for `d` a proper divisor of `n` other than 1.
pub fn candidate_types(n: usize) -> Vec<(u32, usize)> {
    (2..n).filter(|d| n.is_multiple_of(*d)).map(|d| (d as u32, n / d)).collect()
}

/// Looks for a complete intersection of type `(d, m)` for the projection of
/// `points`: a curve of degree `d` interpolated through the images and `m`
/// skew lines spanned by the points, each carrying `d` of them. Every type in
/// `types` is tried in order; the first cover certified at every seed wins.
/// `Ok(None)` means no certificate was found, which is not a proof that the
/// set is not geproci.
pub fn find_geproci(points: &[ProjPoint], types: &[(u32, usize)], seeds: &[u64]) -> Result<Option<PointsetGeproci>> {
    if seeds.is_empty() {
        return Err(Error::Dimension("at least one seed is needed".into()));
    }
    let sets = collinear_structure(points);
    for &(d, m) in types {
        if d as usize * m != points.len() {
            return Err(Error::Dimension(format!("type ({d},{m}) does not match {} points", points.len())));
        }
        let candidates: Vec<&klein::CollinearSet> = sets.iter().filter(|s| s.points.len() == d as usize).collect();
        let lines: Vec<ProjLine> = candidates.iter().map(|s| s.line.clone()).collect();
        let source = CurveSource::Interpolate(d);
        let mut tried = 0;
        let mut found = None;
        let mut failure = None;
        cover::search_covers(&lines, points, m, &mut |c| {
            tried += 1;
            let cover: Vec<ProjLine> = c.iter().map(|&i| lines[i].clone()).collect();
            let certs: Result<Vec<CIcertificate>> =
                seeds.iter().map(|&s| verify_geproci(points, &cover, &source, s)).collect();
            match certs {
                Ok(certs) if certs.iter().all(CIcertificate::passed) => {
                    found = Some(PointsetGeproci {
                        curve_degree: d,
                        cover: c.iter().map(|&i| candidates[i].clone()).collect(),
                        certificates: certs,
                    });
                    true
                }
                Ok(_) => tried >= MAX_COVERS_PER_TYPE,
                Err(e) => {
                    failure = Some(e);
                    true
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinate_lines_project_as_tabulated() {
        let lines = klein::klein_lines();
        let s = MultiPoly::parse(STU_ABCD, "s").unwrap();
        assert!(proportional_over(&symbolic_line_image(&lines[0]), &s, STU, ABCD).unwrap());
        let l10 = MultiPoly::parse(STU_ABCD, "c*s+a*t").unwrap();
        assert!(proportional_over(&symbolic_line_image(&lines[9]), &l10, STU, ABCD).unwrap());
    }

    #[test]
    fn center_is_indeterminate() {
        let c = ProjPoint::from_ints([2, 3, 5, 7]).unwrap();
        let map = ProjectionMap::new(c.clone());
        assert!(map.is_regular());
        assert!(matches!(map.project_point(&c), Err(Error::Indeterminate(_))));
    }

    #[test]
    fn c6_coefficient_of_first_summand() {
        let parts = c6_curve().split_by(STU, ABCD).unwrap();
        let t5u = crate::exact::Monomial::from_exponents(&[0, 5, 1]);
        let (_, c) = parts.iter().find(|(m, _)| *m == t5u).unwrap();
        assert_eq!(*c, MultiPoly::parse(ABCD, "b(a^4-b^4)").unwrap());
    }

    #[test]
    fn c6_contains_image_of_p29() {
        let p = ProjPoint::from_ints([1, 1, 1, 1]).unwrap();
        assert_eq!(verify_curve_contains_images(&c6_curve(), Chart::Pivot, std::slice::from_ref(&p)).unwrap(), 1);
        assert_eq!(verify_curve_contains_images(&c6_projection_curve(), Chart::Projection, &[p]).unwrap(), 1);
    }
}
