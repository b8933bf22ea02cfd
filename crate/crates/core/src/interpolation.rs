//! Linear systems of forms through points, fat-point conditions, and the
//! unexpected hypersurfaces of the 60-point configuration.

use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::{
    monomial_basis, monomials_of_degree, poly_from_coefficients, ExactMatrix, GaussianRational, Matrix, Monomial,
    MultiPoly, Value, Var, VariableContext,
};
use crate::geometry::ProjPoint;
use crate::group::GroupElement;
use crate::klein::{self, data};
use crate::sampling::{self, Avoid};

type Q = GaussianRational;

const XYZW: VariableContext = VariableContext::XYZW;
const ABCD: VariableContext = VariableContext::ABCD;

/// Where a fat point sits.
#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Location {
    Point(ProjPoint),
    /// The general point (a:b:c:d) with indeterminate coordinates.
    Symbolic,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FatPointSpec {
    pub location: Location,
    pub multiplicity: u32,
}

impl FatPointSpec {
    pub fn new(location: Location, multiplicity: u32) -> Self {
        FatPointSpec { location, multiplicity }
    }

    /// Number of conditions imposed in P^3: C(m+2, 3).
    pub fn condition_count(&self) -> usize {
        binomial(self.multiplicity as usize + 2, 3)
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// Forms of one degree through base points (and possibly fat points).
#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub degree: u32,
    pub base: Vec<ProjPoint>,
    pub fat: Vec<FatPointSpec>,
    pub basis: Vec<MultiPoly>,
}

impl LinearSystem {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Rows: points; columns: degree-`d` monomials in descending order.
pub fn evaluation_matrix(points: &[ProjPoint], degree: u32) -> Matrix<Q> {
    let monos = monomial_basis(XYZW, degree);
    Matrix::from_fn(points.len(), monos.len(), |r, c| {
        let p = points[r].coords();
        let m = monos[c];
        (0..4).fold(Q::one(), |acc, s| &acc * &p[s].pow(m.exp(s)))
    })
}

/// All forms of degree `degree` vanishing at the points.
pub fn forms_through(points: &[ProjPoint], degree: u32) -> LinearSystem {
    let monos = monomial_basis(XYZW, degree);
    let rk = evaluation_matrix(points, degree).rank_kernel();
    let basis = rk.kernel.iter().map(|v| poly_from_coefficients(XYZW, &monos, v)).collect();
    LinearSystem { degree, base: points.to_vec(), fat: Vec::new(), basis }
}

/// Coefficient matrix of homogeneous forms of one degree (one row per form).
pub fn coefficient_matrix(forms: &[MultiPoly], degree: u32) -> Matrix<Q> {
    let monos = monomial_basis(XYZW, degree);
    Matrix::from_fn(forms.len(), monos.len(), |r, c| {
        forms[r].sparse().coefficient(monos[c]).cloned().unwrap_or_default()
    })
}

/// Dimension of the span of homogeneous forms of one degree.
pub fn span_dimension(forms: &[MultiPoly], degree: u32) -> usize {
    coefficient_matrix(forms, degree).rank()
}

/// Whether `f` lies in the span of `basis` (all of degree `degree`).
pub fn in_span(f: &MultiPoly, basis: &[MultiPoly], degree: u32) -> bool {
    let mut all = basis.to_vec();
    all.push(f.clone());
    span_dimension(&all, degree) == span_dimension(basis, degree)
}

/// Multi-indices of the partials whose vanishing gives multiplicity `m`:
/// for forms, all partials of order exactly m-1 vanishing at a point forces
/// every lower-order partial to vanish there too (Euler's relation).
pub fn condition_orders(m: u32) -> Vec<[u32; 4]> {
    monomials_of_degree(4, m - 1)
        .into_iter()
        .map(|mono| {
            let e = mono.exponents();
            [e[0], e[1], e[2], e[3]]
        })
        .collect()
}

/// `f(x,y,z,w)` read as `f(a,b,c,d)`.
fn rename_to_abcd(f: &MultiPoly) -> MultiPoly {
    MultiPoly::from_sparse(ABCD, f.sparse().clone())
}

/// One row per partial derivative condition, one column per basis element.
pub fn fatpoint_conditions(basis: &[MultiPoly], spec: &FatPointSpec) -> Result<ExactMatrix> {
    if spec.multiplicity == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let orders = condition_orders(spec.multiplicity);
    let basis: Vec<MultiPoly> = basis.iter().map(|f| f.embed(XYZW)).collect::<Result<_>>()?;
    Ok(match &spec.location {
        Location::Symbolic => ExactMatrix::Poly(Matrix::from_fn(orders.len(), basis.len(), |r, c| {
            rename_to_abcd(&basis[c].partial_multi(&orders[r]))
        })),
        Location::Point(p) => {
            let rows = orders
                .iter()
                .map(|o| basis.iter().map(|f| f.partial_multi(o).evaluate(p.coords())).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            ExactMatrix::Scalar(Matrix::from_rows(basis.len(), rows)?)
        }
    })
}

fn scalar(m: ExactMatrix) -> Matrix<Q> {
    match m {
        ExactMatrix::Scalar(m) => m,
        ExactMatrix::Poly(_) => unreachable!("point locations give scalar matrices"),
    }
}

/// Stacked conditions of several fat points at concrete locations.
pub fn stacked_conditions(basis: &[MultiPoly], fat: &[(ProjPoint, u32)]) -> Result<Matrix<Q>> {
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (p, m) in fat {
        let block = scalar(fatpoint_conditions(basis, &FatPointSpec::new(Location::Point(p.clone()), *m))?);
        rows.extend(block.to_rows());
    }
    Matrix::from_rows(basis.len(), rows)
}

/// Comparison of the actual and the naively expected dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct UnexpectednessReport {
    pub degree: u32,
    pub multiplicities: Vec<u32>,
    /// Dimension of the forms through the base points only.
    pub without_fat: usize,
    pub actual: usize,
    pub expected: usize,
    /// Dimension at each specialization; empty when computed symbolically.
    pub sampled: Vec<usize>,
    pub specializations: Vec<Vec<ProjPoint>>,
    pub symbolic: bool,
    pub seeds_agree: bool,
}

impl UnexpectednessReport {
    pub fn unexpected(&self) -> bool {
        self.actual > self.expected
    }
}

/// Number of independent specializations used when a symbolic rank is not attempted.
pub const SPECIALIZATION_COUNT: usize = 3;

/// Degeneracy loci for general points relative to the configuration.
pub fn klein_avoid() -> Avoid {
    Avoid {
        coordinate_planes: true,
        lines: klein::klein_lines(),
        surfaces: klein::klein_quadrics(),
        points: klein::klein_points(),
    }
}

/// Decides unexpectedness of forms of `degree` through `points` with general
/// fat points of the given multiplicities.
pub fn verify_unexpected(points: &[ProjPoint], degree: u32, mults: &[u32], seed: u64) -> Result<UnexpectednessReport> {
    if mults.contains(&0) {
        return Err(Error::ZeroMultiplicity);
    }
    let basis = forms_through(points, degree).basis;
    let without_fat = basis.len();
    let imposed: usize = mults.iter().map(|&m| binomial(m as usize + 2, 3)).sum();
    let expected = without_fat.saturating_sub(imposed);
    let mut report = UnexpectednessReport {
        degree,
        multiplicities: mults.to_vec(),
        without_fat,
        actual: without_fat,
        expected,
        sampled: Vec::new(),
        specializations: Vec::new(),
        symbolic: false,
        seeds_agree: true,
    };
    if basis.is_empty() || mults.is_empty() {
        return Ok(report);
    }
    if let [m] = mults {
        let cond = fatpoint_conditions(&basis, &FatPointSpec::new(Location::Symbolic, *m))?;
        report.actual = without_fat - cond.rank()?;
        report.symbolic = true;
        return Ok(report);
    }
    let mut avoid = klein_avoid();
    avoid.points.extend(points.iter().cloned());
    for k in 0..SPECIALIZATION_COUNT {
        let mut rng = sampling::rng(sampling::stream_seed(seed, k as u64));
        let pts = sampling::general_points(&mut rng, mults.len(), &avoid)?;
        let fat: Vec<(ProjPoint, u32)> = pts.iter().cloned().zip(mults.iter().copied()).collect();
        let dim = without_fat - stacked_conditions(&basis, &fat)?.rank();
        report.sampled.push(dim);
        report.specializations.push(pts);
    }
    report.seeds_agree = report.sampled.windows(2).all(|w| w[0] == w[1]);
    report.actual = report.sampled[0];
    Ok(report)
}

/// The bihomogeneous cone polynomial in {x,y,z,w,a,b,c,d}.
pub fn cone_f() -> MultiPoly {
    let ctx = VariableContext::XYZW_ABCD;
    let gens = klein::sextic_generators();
    let mut f = MultiPoly::zero(ctx);
    for (g, (k, coef)) in gens.iter().zip(data::CONE_SUMMANDS) {
        let c = MultiPoly::parse(ABCD, coef).expect("cone table parses").embed(ctx).expect("abcd embeds");
        let term = g.embed(ctx).expect("xyzw embeds").mul(&c).scale(&Q::from(k));
        f = f.add(&term);
    }
    f
}

/// The coefficient of each generator in the cone, as forms in {a,b,c,d}.
pub fn cone_coefficients() -> Vec<MultiPoly> {
    data::CONE_SUMMANDS
        .iter()
        .map(|(k, coef)| MultiPoly::parse(ABCD, coef).expect("cone table parses").scale(&Q::from(*k)))
        .collect()
}

/// Swaps the roles of (x,y,z,w) and (a,b,c,d).
pub fn swap_variable_sets(f: &MultiPoly) -> Result<MultiPoly> {
    let f = f.embed(VariableContext::XYZW_ABCD)?;
    let swapped = f.sparse().map_monomials(|m| {
        let e = m.exponents();
        Monomial::from_exponents(&[e[4], e[5], e[6], e[7], e[0], e[1], e[2], e[3]])
    });
    Ok(MultiPoly::from_sparse(VariableContext::XYZW_ABCD, swapped))
}

/// Exact identities certifying that `f` is a cone of degree 6 with vertex
/// (a:b:c:d) through the 60 points.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeCertificate {
    pub terms: usize,
    pub points_checked: usize,
    pub vertex_identities: usize,
    pub swap_symmetric: bool,
    /// Rank of the symbolic multiplicity-6 conditions on the 24 generators.
    pub symbolic_rank: usize,
    pub kernel_dimension: usize,
    pub coefficients_in_kernel: bool,
    pub unexpected: UnexpectednessReport,
}

/// Verifies the cone identities; any failure is an error naming the culprit.
pub fn verify_cone(f: &MultiPoly) -> Result<ConeCertificate> {
    let ctx = VariableContext::XYZW_ABCD;
    let f = f.embed(ctx)?;
    let points = klein::klein_points();
    for (k, p) in points.iter().enumerate() {
        let assignment: Vec<(Var, Value)> =
            [Var::X, Var::Y, Var::Z, Var::W].into_iter().zip(p.coords().iter().cloned().map(Value::Scalar)).collect();
        let r = f.substitute(ABCD, &assignment)?;
        if !r.is_zero() {
            return Err(Error::Identity(format!("cone does not vanish identically at P{}", k + 1)));
        }
    }
    let to_vertex: Vec<(Var, Value)> = [(Var::X, Var::A), (Var::Y, Var::B), (Var::Z, Var::C), (Var::W, Var::D)]
        .into_iter()
        .map(|(x, a)| (x, Value::Poly(MultiPoly::var(ABCD, a).expect("abcd variable"))))
        .collect();
    let orders = condition_orders(6);
    for o in &orders {
        let d = f.partial_multi(&[o[0], o[1], o[2], o[3], 0, 0, 0, 0]);
        if !d.substitute(ABCD, &to_vertex)?.is_zero() {
            return Err(Error::Identity(format!("partial {o:?} of the cone does not vanish at the vertex")));
        }
    }
    let swap_symmetric = swap_variable_sets(&f)? == f;

    let gens = klein::sextic_generators();
    let cond = fatpoint_conditions(&gens, &FatPointSpec::new(Location::Symbolic, 6))?;
    let ExactMatrix::Poly(m) = &cond else { unreachable!("symbolic location") };
    let symbolic_rank = m.rank()?;
    let coefficients_in_kernel = m.mul_vec(&cone_coefficients())?.iter().all(MultiPoly::is_zero);
    let unexpected = verify_unexpected(&points, 6, &[6], 0)?;
    Ok(ConeCertificate {
        terms: f.num_terms(),
        points_checked: points.len(),
        vertex_identities: orders.len(),
        swap_symmetric,
        symbolic_rank,
        kernel_dimension: gens.len() - symbolic_rank,
        coefficients_in_kernel,
        unexpected,
    })
}

/// One specialization of the (4,2,2) system.
#[derive(Clone, Debug, PartialEq)]
pub struct Mult422Run {
    pub seed: u64,
    pub p: ProjPoint,
    pub q1: ProjPoint,
    pub q2: ProjPoint,
    pub rows: usize,
    pub rank: usize,
    pub kernel_dimension: usize,
    /// The unique sextic when the kernel is one-dimensional.
    pub sextic: Option<MultiPoly>,
    /// Coincident input points: uniqueness is not claimed.
    pub degenerate: bool,
}

impl Mult422Run {
    pub fn unique(&self) -> bool {
        !self.degenerate && self.kernel_dimension == 1
    }
}

/// Sextics through the 60 points with multiplicity 4 at `p` and 2 at `q1`, `q2`.
pub fn mult422_at(p: &ProjPoint, q1: &ProjPoint, q2: &ProjPoint, seed: u64) -> Result<Mult422Run> {
    let gens = klein::sextic_generators();
    let m = stacked_conditions(&gens, &[(p.clone(), 4), (q1.clone(), 2), (q2.clone(), 2)])?;
    let rk = m.rank_kernel();
    let sextic = (rk.kernel.len() == 1).then(|| {
        gens.iter().zip(&rk.kernel[0]).fold(MultiPoly::zero(XYZW), |acc, (g, c)| acc.add(&g.scale(c))).normalized()
    });
    Ok(Mult422Run {
        seed,
        p: p.clone(),
        q1: q1.clone(),
        q2: q2.clone(),
        rows: m.rows(),
        rank: rk.rank,
        kernel_dimension: rk.kernel.len(),
        sextic,
        degenerate: p == q1 || p == q2 || q1 == q2,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mult422Certificate {
    pub symbolic_shape: (usize, usize),
    pub symbolic_rank: usize,
    pub runs: Vec<Mult422Run>,
}

/// The symbolic 20x24 rank and the stacked ranks at independent specializations.
pub fn verify_mult_sequence_422(seed: u64) -> Result<Mult422Certificate> {
    let gens = klein::sextic_generators();
    let cond = fatpoint_conditions(&gens, &FatPointSpec::new(Location::Symbolic, 4))?;
    let symbolic_shape = (cond.rows(), cond.cols());
    let symbolic_rank = cond.rank()?;
    let avoid = klein_avoid();
    let mut runs = Vec::new();
    for k in 0..SPECIALIZATION_COUNT as u64 {
        let s = sampling::stream_seed(seed, k);
        let mut rng = sampling::rng(s);
        let run = specialized_422(&mut rng, &avoid, s)?;
        runs.push(run);
    }
    Ok(Mult422Certificate { symbolic_shape, symbolic_rank, runs })
}

fn specialized_422(rng: &mut impl Rng, avoid: &Avoid, seed: u64) -> Result<Mult422Run> {
    let pts = sampling::general_points(rng, 3, avoid)?;
    mult422_at(&pts[0], &pts[1], &pts[2], seed)
}

/// Checks that `g(f)` lies in the span of `basis` for every basis form and
/// every group element; returns the number of (element, form) pairs checked.
pub fn group_stable(basis: &[MultiPoly], degree: u32, elements: &[GroupElement]) -> Result<usize> {
    let base_rank = span_dimension(basis, degree);
    let mut checked = 0;
    for g in elements {
        let images: Vec<MultiPoly> = basis.iter().map(|f| g.act(f)).collect::<Result<_>>()?;
        let mut all = basis.to_vec();
        all.extend(images);
        if span_dimension(&all, degree) != base_rank {
            return Err(Error::Identity(format!("the system is not stable under {g}")));
        }
        checked += basis.len();
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn condition_counts() {
        assert_eq!(condition_orders(1).len(), 1);
        assert_eq!(condition_orders(4).len(), 20);
        assert_eq!(condition_orders(6).len(), 56);
        assert_eq!(FatPointSpec::new(Location::Symbolic, 6).condition_count(), 56);
    }

    #[test]
    fn zero_multiplicity_is_an_error() {
        let spec = FatPointSpec::new(Location::Symbolic, 0);
        assert_eq!(fatpoint_conditions(&[], &spec), Err(Error::ZeroMultiplicity));
    }

    #[test]
    fn a_point_imposes_one_condition_on_planes() {
        let r = verify_unexpected(&[], 1, &[1], 0).unwrap();
        assert_eq!((r.without_fat, r.actual, r.expected), (4, 3, 3));
        assert!(!r.unexpected());
    }

    #[test]
    fn single_point_row() {
        let p = ProjPoint::from_ints([1, 2, 3, 4]).unwrap();
        let m = fatpoint_conditions(&klein::sextic_generators(), &FatPointSpec::new(Location::Point(p), 1)).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 24));
    }

    #[test]
    fn cone_generator_coefficient() {
        let f = cone_f();
        let parts = f.split_by(XYZW, ABCD).unwrap();
        let x5y = Monomial::from_exponents(&[5, 1, 0, 0]);
        let (_, c) = parts.iter().find(|(m, _)| *m == x5y).unwrap();
        assert_eq!(*c, MultiPoly::parse(ABCD, "cd(c^4-d^4)").unwrap());
    }
}
