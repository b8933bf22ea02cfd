use rand::Rng;

use super::{cross, normalized3, PlaneLine, PlanePoint, ProjectionMap, Q, STU};
use crate::error::{Error, Result};
use crate::exact::{monomial_basis, poly_from_coefficients, Matrix, MultiPoly, Value, Var};
use crate::geometry::{dot, ProjLine, ProjPoint};
use crate::sampling::{self, Avoid};

/// Retries of a failing specialization before a failure certificate is returned.
pub const CI_RETRIES: usize = 5;

/// The curve half of a complete intersection.
#[derive(Clone, Debug)]
pub enum CurveSource {
    /// A curve in {s,t,u,a,b,c,d}, specialized at the center.
    Symbolic(MultiPoly),
    /// A curve of this degree through the projected points, interpolated at
    /// the specialization (a seeded combination when not unique).
    Interpolate(u32),
}

/// A complete intersection of a plane curve with the projected cover lines,
/// at one specialization of the center.
#[derive(Clone, Debug)]
pub struct CIcertificate {
    pub seed: u64,
    pub attempts: usize,
    pub center: ProjPoint,
    pub curve_degree: u32,
    pub cover_size: usize,
    /// The specialized curve in {s,t,u}.
    pub curve: MultiPoly,
    /// Dimension of the interpolating system, for interpolated curves.
    pub interpolation_dimension: Option<usize>,
    pub lines: Vec<PlaneLine>,
    pub points: Vec<PlanePoint>,
    pub distinct: bool,
    /// Every image lies on exactly one projected line.
    pub on_one_line: bool,
    /// On each line the curve restricts to the product of the linear
    /// factors of the images on that line, up to a nonzero constant.
    pub exact_intersection: bool,
    pub transverse: Vec<bool>,
    pub bezout: bool,
}

impl CIcertificate {
    pub fn ci_type(&self) -> (u32, usize) {
        (self.curve_degree, self.cover_size)
    }

    pub fn passed(&self) -> bool {
        self.distinct
            && self.on_one_line
            && self.exact_intersection
            && self.bezout
            && self.transverse.iter().all(|&t| t)
    }
}

fn plane_eval(f: &MultiPoly, p: &PlanePoint) -> Q {
    f.evaluate(p).expect("plane point has three coordinates")
}

/// A basis of the plane curves of `degree` through `points`.
pub fn interpolate_plane_curve(points: &[PlanePoint], degree: u32) -> Vec<MultiPoly> {
    let monos = monomial_basis(STU, degree);
    let m = Matrix::from_fn(points.len(), monos.len(), |r, c| {
        let mono = monos[c];
        (0..3).fold(Q::one(), |acc, s| &acc * &points[r][s].pow(mono.exp(s)))
    });
    m.rank_kernel().kernel.iter().map(|v| poly_from_coefficients(STU, &monos, v)).collect()
}

/// Restriction of a plane curve to a line, as a binary form in (s, t) with
/// the line parametrized by `s*p + t*q`.
fn restrict(curve: &MultiPoly, p: &PlanePoint, q: &PlanePoint) -> Result<MultiPoly> {
    let s = MultiPoly::var(STU, Var::S)?;
    let t = MultiPoly::var(STU, Var::T)?;
    let assignment: Vec<(Var, Value)> = [Var::S, Var::T, Var::U]
        .into_iter()
        .enumerate()
        .map(|(k, v)| (v, Value::Poly(s.scale(&p[k]).add(&t.scale(&q[k])))))
        .collect();
    curve.substitute(STU, &assignment)
}

/// Parameters (lambda, mu) with `x = lambda*p + mu*q`.
fn line_parameters(x: &PlanePoint, p: &PlanePoint, q: &PlanePoint) -> Option<(Q, Q)> {
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let det = &(&p[i] * &q[j]) - &(&p[j] * &q[i]);
        if !det.is_zero() {
            let inv = det.inv().ok()?;
            let lambda = &(&(&x[i] * &q[j]) - &(&x[j] * &q[i])) * &inv;
            let mu = &(&(&p[i] * &x[j]) - &(&p[j] * &x[i])) * &inv;
            return Some((lambda, mu));
        }
    }
    None
}

/// Whether the curve meets the line exactly in `on_line`, each simply.
fn meets_exactly(curve: &MultiPoly, line: &PlaneLine, on_line: &[&PlanePoint]) -> Result<bool> {
    let basis = Matrix::from_rows(3, vec![line.to_vec()])?.rank_kernel().kernel;
    let p: PlanePoint = basis[0].clone().try_into().expect("three entries");
    let q: PlanePoint = basis[1].clone().try_into().expect("three entries");
    let mut g = restrict(curve, &p, &q)?;
    if g.is_zero() || on_line.len() != g.degree() as usize {
        return Ok(false);
    }
    let (s, t) = (MultiPoly::var(STU, Var::S)?, MultiPoly::var(STU, Var::T)?);
    for x in on_line {
        let Some((lambda, mu)) = line_parameters(x, &p, &q) else { return Ok(false) };
        let factor = s.scale(&mu).sub(&t.scale(&lambda));
        match g.div_exact(&factor)? {
            Some(quot) => g = quot,
            None => return Ok(false),
        }
    }
    Ok(g.as_constant().is_some_and(|c| !c.is_zero()))
}

fn gradient(curve: &MultiPoly, x: &PlanePoint) -> Result<[Q; 3]> {
    let parts = [Var::S, Var::T, Var::U].map(|v| curve.partial(v, 1));
    let mut out = [Q::zero(), Q::zero(), Q::zero()];
    for (k, d) in parts.into_iter().enumerate() {
        out[k] = plane_eval(&d?, x);
    }
    Ok(out)
}

fn certify(
    z: &[ProjPoint],
    cover: &[ProjLine],
    source: &CurveSource,
    map: &ProjectionMap,
    rng: &mut impl Rng,
) -> Result<Option<CIcertificate>> {
    let points: Vec<PlanePoint> = z.iter().map(|p| map.project_point(p)).collect::<Result<_>>()?;
    let lines: Vec<PlaneLine> = cover.iter().map(|l| map.project_line(l)).collect::<Result<_>>()?;
    let mut sorted = points.clone();
    sorted.sort_by_key(|p| format!("{}:{}:{}", p[0], p[1], p[2]));
    let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
    if !distinct {
        return Ok(None);
    }
    let (curve, interpolation_dimension) = match source {
        CurveSource::Symbolic(c) => (map.specialize(c)?, None),
        CurveSource::Interpolate(d) => {
            let basis = interpolate_plane_curve(&points, *d);
            let dim = basis.len();
            let curve = if dim == 1 {
                basis[0].clone()
            } else {
                basis.iter().fold(MultiPoly::zero(STU), |acc, f| {
                    acc.add(&f.scale(&Q::from(rng.random_range(1..=sampling::COORD_BOUND))))
                })
            };
            (curve, Some(dim))
        }
    };
    if curve.is_zero() && interpolation_dimension.is_none() {
        return Ok(None);
    }
    let curve = if curve.is_zero() { curve } else { curve.normalized() };
    let incident: Vec<Vec<usize>> =
        points.iter().map(|x| (0..lines.len()).filter(|&j| dot(&lines[j], x).is_zero()).collect()).collect();
    let on_one_line = incident.iter().all(|js| js.len() == 1);
    let mut exact_intersection = !curve.is_zero();
    for (j, line) in lines.iter().enumerate() {
        if !exact_intersection {
            break;
        }
        let on: Vec<&PlanePoint> =
            points.iter().zip(&incident).filter(|(_, js)| js.contains(&j)).map(|(x, _)| x).collect();
        exact_intersection = meets_exactly(&curve, line, &on)?;
    }
    let transverse = points
        .iter()
        .zip(&incident)
        .map(|(x, js)| {
            let Some(&j) = js.first() else { return Ok(false) };
            let g = gradient(&curve, x)?;
            Ok(cross(&g, &lines[j]).iter().any(|c| !c.is_zero()))
        })
        .collect::<Result<Vec<bool>>>()?;
    let curve_degree = curve.degree();
    Ok(Some(CIcertificate {
        seed: 0,
        attempts: 0,
        center: map.center().clone(),
        curve_degree,
        cover_size: lines.len(),
        curve,
        interpolation_dimension,
        lines,
        points,
        distinct,
        on_one_line,
        exact_intersection,
        transverse,
        bezout: curve_degree as usize * cover.len() == z.len(),
    }))
}

/// Certifies that the projection of `z` from a seeded general center is the
/// complete intersection of the curve and the projected cover lines.
pub fn verify_geproci(z: &[ProjPoint], cover: &[ProjLine], source: &CurveSource, seed: u64) -> Result<CIcertificate> {
    let mut rng = sampling::rng(seed);
    let avoid = Avoid { coordinate_planes: true, lines: cover.to_vec(), surfaces: Vec::new(), points: z.to_vec() };
    let mut attempts = 0;
    let mut last = None;
    let mut failures = 0;
    while attempts < sampling::MAX_ATTEMPTS && failures < CI_RETRIES {
        attempts += 1;
        let center = sampling::general_points(&mut rng, 1, &avoid)?.remove(0);
        let map = ProjectionMap::new(center);
        if !map.is_regular() {
            continue;
        }
        let Some(mut cert) = certify(z, cover, source, &map, &mut rng)? else { continue };
        cert.seed = seed;
        cert.attempts = attempts;
        if cert.passed() {
            return Ok(cert);
        }
        failures += 1;
        last = Some(cert);
    }
    last.ok_or(Error::Degenerate { attempts })
}

/// Pairwise intersections of projected lines.
#[derive(Clone, Debug, PartialEq)]
pub struct StarCertificate {
    pub lines: usize,
    pub nodes: Vec<PlanePoint>,
    /// No three of the lines are concurrent.
    pub distinct: bool,
    pub off_curve: bool,
}

pub fn star_nodes(lines: &[PlaneLine], curve: &MultiPoly) -> StarCertificate {
    let mut nodes = Vec::new();
    for a in 0..lines.len() {
        for b in a + 1..lines.len() {
            if let Some(x) = normalized3(cross(&lines[a], &lines[b])) {
                nodes.push(x);
            }
        }
    }
    let pairs = lines.len() * lines.len().saturating_sub(1) / 2;
    let mut keys: Vec<String> = nodes.iter().map(|p| format!("{}:{}:{}", p[0], p[1], p[2])).collect();
    keys.sort();
    keys.dedup();
    let distinct = nodes.len() == pairs && keys.len() == pairs;
    let off_curve = nodes.iter().all(|x| !plane_eval(curve, x).is_zero());
    StarCertificate { lines: lines.len(), nodes, distinct, off_curve }
}
