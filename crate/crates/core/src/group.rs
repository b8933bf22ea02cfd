//! Finite matrix groups acting on P^3: closure, orbits, and the generators
//! of the Heisenberg group and of the order-80 extension.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Matrix, MultiPoly, Value, Var, VariableContext};
use crate::geometry::{normalize_projective, ProjPoint};

type Q = GaussianRational;

/// Invertible 4x4 matrix over Q(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement(Matrix<Q>);

/// Closure mode: linear keeps matrices, projective identifies scalar multiples.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Linear,
    Projective,
}

impl GroupElement {
    pub fn new(m: Matrix<Q>) -> Result<Self> {
        if m.rows() != 4 || m.cols() != 4 {
            return Err(Error::Dimension(format!("group elements are 4x4, got {}x{}", m.rows(), m.cols())));
        }
        if m.determinant().is_zero() {
            return Err(Error::Construction("singular group element".into()));
        }
        Ok(GroupElement(m))
    }

    pub fn from_ints(rows: [[i64; 4]; 4]) -> Self {
        GroupElement(Matrix::from_fn(4, 4, |r, c| Q::from(rows[r][c])))
    }

    pub fn identity() -> Self {
        GroupElement(Matrix::identity(4))
    }

    pub fn matrix(&self) -> &Matrix<Q> {
        &self.0
    }

    pub fn mul(&self, rhs: &GroupElement) -> GroupElement {
        GroupElement(self.0.mul(&rhs.0))
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement(self.0.inverse().expect("group elements are invertible"))
    }

    pub fn neg(&self) -> GroupElement {
        GroupElement(self.0.scale(&Q::from(-1)))
    }

    pub fn pow(&self, e: u32) -> GroupElement {
        (0..e).fold(GroupElement::identity(), |acc, _| acc.mul(self))
    }

    /// Representative of the scalar class: first nonzero entry (row-major) is 1.
    pub fn canonical(&self) -> GroupElement {
        let mut data: Vec<Q> = (0..4).flat_map(|r| self.0.row(r).to_vec()).collect();
        normalize_projective(&mut data).expect("nonzero matrix");
        GroupElement(Matrix::from_rows(4, data.chunks(4).map(<[Q]>::to_vec).collect()).expect("4x4"))
    }

    pub fn projectively_equal(&self, other: &GroupElement) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn is_scalar(&self) -> bool {
        self.projectively_equal(&GroupElement::identity())
    }

    pub fn apply_point(&self, p: &ProjPoint) -> ProjPoint {
        let v = self.0.mul_vec(p.coords());
        ProjPoint::new(v.try_into().expect("four coordinates")).expect("invertible image")
    }

    /// The coordinate change `f |-> f(g x)` on forms in {x,y,z,w}.
    pub fn act(&self, f: &MultiPoly) -> Result<MultiPoly> {
        let ctx = VariableContext::XYZW;
        let f = f.embed(ctx)?;
        let assignment: Vec<(Var, Value)> = ctx
            .vars()
            .iter()
            .enumerate()
            .map(|(r, &v)| (v, Value::Poly(MultiPoly::linear(ctx, self.0.row(r)))))
            .collect();
        f.substitute(ctx, &assignment)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..4)
            .map(|r| {
                let cells: Vec<String> = self.0.row(r).iter().map(ToString::to_string).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite group given by generators together with all its elements.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    pub generators: Vec<GroupElement>,
    pub mode: Mode,
    elements: Vec<GroupElement>,
}

impl MatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in breadth-first discovery order, identity first.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        let g = match self.mode {
            Mode::Linear => g.clone(),
            Mode::Projective => g.canonical(),
        };
        self.elements.contains(&g)
    }

    /// Elements commuting with every element (linear mode semantics).
    pub fn center(&self) -> Vec<GroupElement> {
        self.elements.iter().filter(|a| self.elements.iter().all(|b| a.mul(b) == b.mul(a))).cloned().collect()
    }

    /// The subgroup generated by all commutators `a b a^-1 b^-1`.
    pub fn commutator_subgroup(&self, cap: usize) -> Result<MatrixGroup> {
        let mut comms: Vec<GroupElement> = Vec::new();
        let mut seen = HashSet::new();
        for a in &self.elements {
            let ai = a.inverse();
            for b in &self.elements {
                let c = a.mul(b).mul(&ai).mul(&b.inverse());
                if seen.insert(c.clone()) {
                    comms.push(c);
                }
            }
        }
        generate_group(&comms, self.mode, cap)
    }
}

/// Breadth-first closure of the generators under multiplication.
pub fn generate_group(generators: &[GroupElement], mode: Mode, cap: usize) -> Result<MatrixGroup> {
    let key = |g: GroupElement| match mode {
        Mode::Linear => g,
        Mode::Projective => g.canonical(),
    };
    let id = GroupElement::identity();
    let mut elements = vec![id.clone()];
    let mut seen: HashSet<GroupElement> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(e) = queue.pop_front() {
        for g in generators {
            let h = key(e.mul(g));
            if seen.insert(h.clone()) {
                if elements.len() == cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                elements.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(MatrixGroup { generators: generators.to_vec(), mode, elements })
}

/// Orbit of a form under repeated application of the generators, each
/// image normalized by its leading coefficient; first-appearance order.
pub fn orbit(generators: &[GroupElement], f: &MultiPoly) -> Result<Vec<MultiPoly>> {
    let start = f.embed(VariableContext::XYZW)?.normalized();
    let mut out = vec![start.clone()];
    let mut seen: HashSet<String> = HashSet::from([start.to_string()]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let img = g.act(&p)?.normalized();
            if seen.insert(img.to_string()) {
                out.push(img.clone());
                queue.push_back(img);
            }
        }
    }
    Ok(out)
}

/// Permutation of a point list induced by `g`, or `None` if the list is not invariant.
pub fn point_permutation(g: &GroupElement, points: &[ProjPoint]) -> Option<Vec<usize>> {
    let index: HashMap<&ProjPoint, usize> = points.iter().enumerate().map(|(k, p)| (p, k)).collect();
    points.iter().map(|p| index.get(&g.apply_point(p)).copied()).collect()
}

/// The Heisenberg generators S1, S2, T1, T2.
pub fn heisenberg_generators() -> [GroupElement; 4] {
    [
        GroupElement::from_ints([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]),
        GroupElement::from_ints([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
        GroupElement::from_ints([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]),
        GroupElement::from_ints([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]),
    ]
}

/// The extra generator T = (1+i)/2 * [[-i,0,0,i],[0,1,1,0],[1,0,0,1],[0,-i,i,0]].
pub fn matrix_t() -> GroupElement {
    let i = Q::i();
    let (o, z) = (Q::one(), Q::zero());
    let rows = vec![
        vec![-&i, z.clone(), z.clone(), i.clone()],
        vec![z.clone(), o.clone(), o.clone(), z.clone()],
        vec![o.clone(), z.clone(), z.clone(), o.clone()],
        vec![z.clone(), -&i, i.clone(), z.clone()],
    ];
    let scale =
        Q::new(num_rational::BigRational::new(1.into(), 2.into()), num_rational::BigRational::new(1.into(), 2.into()));
    GroupElement(Matrix::from_rows(4, rows).expect("4x4").scale(&scale))
}

/// Generators of the order-80 group: the Heisenberg generators and T.
pub fn g80_generators() -> Vec<GroupElement> {
    let mut g = heisenberg_generators().to_vec();
    g.push(matrix_t());
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = generate_group(&[GroupElement::identity()], Mode::Linear, 10).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn cap_is_reported() {
        let err = generate_group(&heisenberg_generators(), Mode::Linear, 8).unwrap_err();
        assert_eq!(err, Error::GroupTooLarge { cap: 8 });
    }

    #[test]
    fn t_maps_q1_to_q2() {
        let q1 = MultiPoly::parse(VariableContext::XYZW, "x^2+y^2+z^2+w^2").unwrap();
        let img = matrix_t().act(&q1).unwrap().normalized();
        assert_eq!(img, MultiPoly::parse(VariableContext::XYZW, "xw+zy").unwrap());
    }

    #[test]
    fn determinant_of_t_is_one() {
        assert!(matrix_t().matrix().determinant().is_one());
        assert!(matrix_t().mul(&matrix_t().inverse()).is_scalar());
    }
}
