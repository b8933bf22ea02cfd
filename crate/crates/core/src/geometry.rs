//! Points, lines and planes of projective 3-space over Q(i).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Matrix, MultiPoly, VariableContext};

type Q = GaussianRational;

/// Scales a vector so that its first nonzero entry is 1.
pub fn normalize_projective(v: &mut [Q]) -> Result<()> {
    let lead = v.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroVector)?;
    if lead.is_one() {
        return Ok(());
    }
    let inv = lead.inv()?;
    for c in v.iter_mut() {
        if !c.is_zero() {
            *c = &*c * &inv;
        }
    }
    Ok(())
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    let mut acc = Q::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

fn q(v: i64) -> Q {
    Q::from(v)
}

/// Point of P^3 with its first nonzero coordinate equal to 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: [Q; 4],
}

impl ProjPoint {
    pub fn new(mut coords: [Q; 4]) -> Result<Self> {
        normalize_projective(&mut coords)?;
        Ok(ProjPoint { coords })
    }

    pub fn from_ints(v: [i64; 4]) -> Result<Self> {
        ProjPoint::new(v.map(q))
    }

    pub fn coords(&self) -> &[Q; 4] {
        &self.coords
    }

    /// The plane `p0 x + p1 y + p2 z + p3 w = 0`.
    pub fn dual_plane(&self) -> ProjPlane {
        ProjPlane { coeffs: self.coords.clone() }
    }

    /// Whether the point lies on the hypersurface `f = 0` (`f` in {x,y,z,w}).
    pub fn lies_on(&self, f: &MultiPoly) -> Result<bool> {
        Ok(f.evaluate(&self.coords)?.is_zero())
    }

    pub fn collinear(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> bool {
        match ProjLine::through(a, b) {
            Ok(l) => l.contains(c),
            Err(_) => true,
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.coords;
        write!(f, "[{a}:{b}:{c}:{d}]")
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `[a:b:c:d]`, with each coordinate in the Gaussian rational text format.
impl FromStr for ProjPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse { what: "point", input: s.to_string(), reason: reason.to_string() };
        let body =
            s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(|| err("expected [a:b:c:d]"))?;
        let parts: Vec<Q> = body.split(':').map(str::parse).collect::<Result<_>>()?;
        let coords: [Q; 4] = parts.try_into().map_err(|_| err("expected four coordinates"))?;
        ProjPoint::new(coords).map_err(|_| err("all coordinates are zero"))
    }
}

/// Plane of P^3 given by one linear form, normalized like points.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjPlane {
    coeffs: [Q; 4],
}

impl ProjPlane {
    pub fn new(mut coeffs: [Q; 4]) -> Result<Self> {
        normalize_projective(&mut coeffs)?;
        Ok(ProjPlane { coeffs })
    }

    pub fn coeffs(&self) -> &[Q; 4] {
        &self.coeffs
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        dot(&self.coeffs, p.coords()).is_zero()
    }

    pub fn form(&self) -> MultiPoly {
        MultiPoly::linear(VariableContext::XYZW, &self.coeffs)
    }
}

/// Plücker index pairs in the order 01, 02, 03, 12, 13, 23.
const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn minors(u: &[Q; 4], v: &[Q; 4]) -> [Q; 6] {
    PAIRS.map(|(i, j)| &(&u[i] * &v[j]) - &(&u[j] * &v[i]))
}

/// Line of P^3, stored as two independent linear forms and its normalized
/// Plücker vector. Equality compares Plücker vectors only.
#[derive(Clone)]
pub struct ProjLine {
    forms: [[Q; 4]; 2],
    plucker: [Q; 6],
}

impl PartialEq for ProjLine {
    fn eq(&self, other: &Self) -> bool {
        self.plucker == other.plucker
    }
}

impl Eq for ProjLine {}

impl std::hash::Hash for ProjLine {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.plucker.hash(state);
    }
}

impl ProjLine {
    /// The line `V(f, g)` for independent linear forms given by coefficients.
    pub fn from_forms(f: [Q; 4], g: [Q; 4]) -> Result<Self> {
        let dual = minors(&f, &g);
        let mut plucker = [dual[5].clone(), -&dual[4], dual[3].clone(), dual[2].clone(), -&dual[1], dual[0].clone()];
        normalize_projective(&mut plucker).map_err(|_| Error::Construction("dependent linear forms".into()))?;
        Ok(ProjLine { forms: [f, g], plucker })
    }

    /// `V(f, g)` from two degree-1 polynomials in {x,y,z,w}.
    pub fn from_polys(f: &MultiPoly, g: &MultiPoly) -> Result<Self> {
        ProjLine::from_forms(linear_coeffs(f)?, linear_coeffs(g)?)
    }

    /// The line spanned by two distinct points.
    pub fn through(p: &ProjPoint, r: &ProjPoint) -> Result<Self> {
        let mut plucker = minors(p.coords(), r.coords());
        normalize_projective(&mut plucker).map_err(|_| Error::Construction(format!("{p} and {r} coincide")))?;
        let m = Matrix::from_rows(4, vec![p.coords().to_vec(), r.coords().to_vec()])?;
        let kernel = m.rank_kernel().kernel;
        let to_arr = |v: &Vec<Q>| -> [Q; 4] { v.clone().try_into().expect("four entries") };
        Ok(ProjLine { forms: [to_arr(&kernel[0]), to_arr(&kernel[1])], plucker })
    }

    /// Two distinct points spanning the line.
    pub fn spanning_points(&self) -> [ProjPoint; 2] {
        let m = Matrix::from_rows(4, vec![self.forms[0].to_vec(), self.forms[1].to_vec()]).expect("2x4");
        let kernel = m.rank_kernel().kernel;
        [0, 1].map(|k| ProjPoint::new(kernel[k].clone().try_into().expect("four entries")).expect("kernel vector"))
    }

    /// Intersection with a plane not containing the line.
    pub fn meet_plane(&self, plane: &ProjPlane) -> Option<ProjPoint> {
        let [p, r] = self.spanning_points();
        let (hp, hr) = (dot(plane.coeffs(), p.coords()), dot(plane.coeffs(), r.coords()));
        let coords: Vec<Q> = p.coords().iter().zip(r.coords()).map(|(a, b)| &(&hr * a) - &(&hp * b)).collect();
        ProjPoint::new(coords.try_into().ok()?).ok()
    }

    pub fn plucker(&self) -> &[Q; 6] {
        &self.plucker
    }

    pub fn forms(&self) -> &[[Q; 4]; 2] {
        &self.forms
    }

    pub fn form_polys(&self) -> [MultiPoly; 2] {
        self.forms.clone().map(|f| MultiPoly::linear(VariableContext::XYZW, &f))
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.forms.iter().all(|f| dot(f, p.coords()).is_zero())
    }

    /// Whether `self` lies in the plane.
    pub fn in_plane(&self, plane: &ProjPlane) -> bool {
        let m = Matrix::from_rows(4, vec![self.forms[0].to_vec(), self.forms[1].to_vec(), plane.coeffs().to_vec()])
            .expect("three rows of four");
        m.rank() == 2
    }

    /// Plücker pairing; zero iff the lines are coplanar (meet or coincide).
    pub fn pairing(&self, other: &ProjLine) -> Q {
        let (p, r) = (&self.plucker, &other.plucker);
        let terms = [&p[0] * &r[5], -&(&p[1] * &r[4]), &p[2] * &r[3], &p[3] * &r[2], -&(&p[4] * &r[1]), &p[5] * &r[0]];
        terms.iter().fold(Q::zero(), |acc, t| &acc + t)
    }

    pub fn meets(&self, other: &ProjLine) -> bool {
        self.pairing(other).is_zero()
    }

    pub fn skew(&self, other: &ProjLine) -> bool {
        !self.meets(other)
    }

    /// Satisfies the Plücker quadric relation (pairing with itself vanishes).
    pub fn on_grassmannian(&self) -> bool {
        self.pairing(self).is_zero()
    }

    /// The common point of two distinct meeting lines.
    pub fn intersection(&self, other: &ProjLine) -> Option<ProjPoint> {
        if self == other || !self.meets(other) {
            return None;
        }
        let rows = self.forms.iter().chain(other.forms.iter()).map(|f| f.to_vec()).collect();
        let rk = Matrix::from_rows(4, rows).ok()?.rank_kernel();
        (rk.kernel.len() == 1).then(|| ProjPoint::new(rk.kernel[0].clone().try_into().ok()?).ok())?
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.plucker.iter().map(ToString::to_string).collect();
        write!(f, "Line({})", p.join(", "))
    }
}

/// Coefficients of a degree-1 form in {x,y,z,w}.
pub fn linear_coeffs(f: &MultiPoly) -> Result<[Q; 4]> {
    let f = f.embed(VariableContext::XYZW)?;
    if f.is_zero() || f.degree() != 1 || !f.is_homogeneous() {
        return Err(Error::Construction(format!("`{f}` is not a nonzero linear form")));
    }
    Ok([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]].map(|e| f.coefficient(&e)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> ProjPoint {
        s.parse().unwrap()
    }

    fn line(f: &str, g: &str) -> ProjLine {
        let ctx = VariableContext::XYZW;
        ProjLine::from_polys(&MultiPoly::parse(ctx, f).unwrap(), &MultiPoly::parse(ctx, g).unwrap()).unwrap()
    }

    #[test]
    fn normalization_makes_scalar_multiples_equal() {
        assert_eq!(pt("[0:2:2i:0]"), pt("[0:1:i:0]"));
        assert_eq!(pt("[0:i:1:0]"), pt("[0:1:-i:0]"));
        assert!("[0:0:0:0]".parse::<ProjPoint>().is_err());
        assert!("[1:2:3]".parse::<ProjPoint>().is_err());
    }

    #[test]
    fn plucker_from_points_matches_forms() {
        let l = line("z + i*w", "x + i*y");
        let a = pt("[1:i:0:0]");
        let b = pt("[0:0:1:i]");
        assert!(l.contains(&a) && l.contains(&b));
        assert_eq!(ProjLine::through(&a, &b).unwrap(), l);
        assert!(l.on_grassmannian());
    }

    #[test]
    fn meeting_and_intersection() {
        let l1 = line("x", "y");
        let l10 = line("z", "x");
        let l30 = line("w", "z");
        assert!(l1.meets(&l10));
        assert_eq!(l1.intersection(&l10), Some(pt("[0:0:0:1]")));
        assert!(l1.skew(&l30));
        assert_eq!(l1.intersection(&l30), None);
    }

    #[test]
    fn line_in_plane() {
        let l = line("x", "y");
        assert!(l.in_plane(&ProjPlane::new([q(1), q(0), q(0), q(0)]).unwrap()));
        assert!(!l.in_plane(&ProjPlane::new([q(0), q(0), q(1), q(0)]).unwrap()));
    }
}
