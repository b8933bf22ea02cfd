//! Polynomials over Q(i) tied to a variable context.

use std::fmt;

use super::context::{Var, VariableContext};
use super::gaussian::GaussianRational;
use super::monomial::{monomials_of_degree, Monomial, MAX_VARS};
use super::ring::Ring;
use super::sparse::SparsePoly;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with Gaussian rational coefficients.
#[derive(Clone, PartialEq)]
pub struct MultiPoly {
    ctx: VariableContext,
    poly: SparsePoly<GaussianRational>,
}

/// A substitution value: either a scalar or a polynomial in the target context.
#[derive(Clone, Debug)]
pub enum Value {
    Scalar(GaussianRational),
    Poly(MultiPoly),
}

impl From<GaussianRational> for Value {
    fn from(v: GaussianRational) -> Self {
        Value::Scalar(v)
    }
}

impl From<MultiPoly> for Value {
    fn from(v: MultiPoly) -> Self {
        Value::Poly(v)
    }
}

impl MultiPoly {
    pub fn zero(ctx: VariableContext) -> Self {
        MultiPoly { ctx, poly: SparsePoly::zero() }
    }

    pub fn constant(ctx: VariableContext, c: GaussianRational) -> Self {
        MultiPoly { ctx, poly: SparsePoly::constant(c) }
    }

    pub fn var(ctx: VariableContext, v: Var) -> Result<Self> {
        let slot = ctx.require_slot(v)?;
        Ok(MultiPoly { ctx, poly: SparsePoly::monomial(Monomial::var(slot, 1), GaussianRational::one()) })
    }

    pub fn from_sparse(ctx: VariableContext, poly: SparsePoly<GaussianRational>) -> Self {
        MultiPoly { ctx, poly }
    }

    pub fn from_terms(ctx: VariableContext, terms: impl IntoIterator<Item = (Monomial, GaussianRational)>) -> Self {
        MultiPoly { ctx, poly: SparsePoly::from_terms(terms) }
    }

    /// Linear form `sum coeffs[k] * vars[k]`.
    pub fn linear(ctx: VariableContext, coeffs: &[GaussianRational]) -> Self {
        assert_eq!(coeffs.len(), ctx.len());
        Self::from_terms(ctx, coeffs.iter().enumerate().map(|(k, c)| (Monomial::var(k, 1), c.clone())))
    }

    /// Parses an expression such as `xy(x^4-y^4) + 5i*z^2`.
    pub fn parse(ctx: VariableContext, src: &str) -> Result<Self> {
        super::parse::parse_poly(ctx, src)
    }

    pub fn ctx(&self) -> VariableContext {
        self.ctx
    }

    pub fn sparse(&self) -> &SparsePoly<GaussianRational> {
        &self.poly
    }

    pub fn terms(&self) -> &[(Monomial, GaussianRational)] {
        self.poly.terms()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn degree(&self) -> u32 {
        self.poly.degree()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.poly.is_homogeneous()
    }

    pub fn num_terms(&self) -> usize {
        self.poly.len()
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.poly.terms() {
            [] => Some(GaussianRational::zero()),
            [(m, c)] if *m == Monomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    /// Coefficient of the monomial with the given exponents (context order).
    pub fn coefficient(&self, exps: &[u32]) -> GaussianRational {
        self.poly.coefficient(Monomial::from_exponents(exps)).cloned().unwrap_or_default()
    }

    fn same_ctx(&self, rhs: &MultiPoly) -> Result<()> {
        if self.ctx != rhs.ctx {
            return Err(Error::ContextMismatch(self.ctx.to_string(), rhs.ctx.to_string()));
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &MultiPoly) -> Result<MultiPoly> {
        self.same_ctx(rhs)?;
        Ok(MultiPoly { ctx: self.ctx, poly: self.poly.add(&rhs.poly) })
    }

    pub fn try_sub(&self, rhs: &MultiPoly) -> Result<MultiPoly> {
        self.same_ctx(rhs)?;
        Ok(MultiPoly { ctx: self.ctx, poly: self.poly.sub(&rhs.poly) })
    }

    pub fn try_mul(&self, rhs: &MultiPoly) -> Result<MultiPoly> {
        self.same_ctx(rhs)?;
        Ok(MultiPoly { ctx: self.ctx, poly: self.poly.mul(&rhs.poly) })
    }

    /// Sum within a shared context; panics on mismatch.
    pub fn add(&self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("context mismatch")
    }

    pub fn sub(&self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("context mismatch")
    }

    pub fn mul(&self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("context mismatch")
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly { ctx: self.ctx, poly: self.poly.neg() }
    }

    pub fn scale(&self, k: &GaussianRational) -> MultiPoly {
        MultiPoly { ctx: self.ctx, poly: self.poly.scale(k) }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        MultiPoly { ctx: self.ctx, poly: self.poly.pow(e) }
    }

    /// Exact quotient when `rhs` divides `self`.
    pub fn div_exact(&self, rhs: &MultiPoly) -> Result<Option<MultiPoly>> {
        self.same_ctx(rhs)?;
        Ok(self.poly.div_exact(&rhs.poly).map(|poly| MultiPoly { ctx: self.ctx, poly }))
    }

    /// Re-expresses the polynomial in a context containing all of its variables.
    pub fn embed(&self, target: VariableContext) -> Result<MultiPoly> {
        if target == self.ctx {
            return Ok(self.clone());
        }
        let map: Vec<usize> = self.ctx.vars().iter().map(|&v| target.require_slot(v)).collect::<Result<_>>()?;
        let poly = self.poly.map_monomials(|m| {
            let mut e = [0u32; MAX_VARS];
            for (src, &dst) in map.iter().enumerate() {
                e[dst] = m.exp(src);
            }
            Monomial::from_exponents(&e[..target.len()])
        });
        Ok(MultiPoly { ctx: target, poly })
    }

    /// Divides by the leading coefficient so that the leading term is monic.
    pub fn normalized(&self) -> MultiPoly {
        match self.poly.leading() {
            None => self.clone(),
            Some((_, lc)) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Formal partial derivative, iterated `order` times.
    pub fn partial(&self, v: Var, order: u32) -> Result<MultiPoly> {
        let slot = self.ctx.require_slot(v)?;
        Ok(MultiPoly { ctx: self.ctx, poly: self.poly.partial(slot, order) })
    }

    /// Mixed partial derivative with the given order per context slot.
    pub fn partial_multi(&self, orders: &[u32]) -> MultiPoly {
        let mut poly = self.poly.clone();
        for (slot, &k) in orders.iter().enumerate() {
            if k > 0 {
                poly = poly.partial(slot, k);
            }
        }
        MultiPoly { ctx: self.ctx, poly }
    }

    /// Value at a full scalar assignment (one value per context slot).
    pub fn evaluate(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        if point.len() != self.ctx.len() {
            return Err(Error::Dimension(format!("evaluating a polynomial in {} at {} values", self.ctx, point.len())));
        }
        let powers = PowerCache::new(point, self.degree());
        let mut acc = GaussianRational::zero();
        for (m, c) in self.terms() {
            let mut t = c.clone();
            for (slot, row) in powers.rows.iter().enumerate() {
                let e = m.exp(slot) as usize;
                if e > 0 {
                    t = &t * &row[e];
                }
            }
            acc.add_to(&t);
        }
        Ok(acc)
    }

    /// Simultaneous substitution. Every variable of `self` that is not
    /// assigned must exist in `target`; every polynomial value must live in
    /// `target`.
    pub fn substitute(&self, target: VariableContext, assignment: &[(Var, Value)]) -> Result<MultiPoly> {
        let mut values: Vec<Option<MultiPoly>> = vec![None; self.ctx.len()];
        for (v, val) in assignment {
            let slot = self.ctx.require_slot(*v)?;
            let p = match val {
                Value::Scalar(c) => MultiPoly::constant(target, c.clone()),
                Value::Poly(p) => {
                    if p.ctx != target {
                        return Err(Error::ContextMismatch(p.ctx.to_string(), target.to_string()));
                    }
                    p.clone()
                }
            };
            values[slot] = Some(p);
        }
        let mut kept_slot = vec![None; self.ctx.len()];
        for (slot, v) in self.ctx.vars().iter().enumerate() {
            if values[slot].is_none() {
                kept_slot[slot] = Some(target.require_slot(*v)?);
            }
        }
        let max_deg: Vec<u32> =
            (0..self.ctx.len()).map(|s| self.terms().iter().map(|(m, _)| m.exp(s)).max().unwrap_or(0)).collect();
        let powers: Vec<Vec<SparsePoly<GaussianRational>>> = values
            .iter()
            .zip(&max_deg)
            .map(|(v, &d)| match v {
                None => Vec::new(),
                Some(p) => {
                    let mut row = vec![SparsePoly::constant(GaussianRational::one())];
                    for k in 1..=d as usize {
                        let next = row[k - 1].mul(&p.poly);
                        row.push(next);
                    }
                    row
                }
            })
            .collect();
        let mut acc: Vec<(Monomial, GaussianRational)> = Vec::new();
        let mut result = SparsePoly::zero();
        for (m, c) in self.terms() {
            let mut kept = [0u32; MAX_VARS];
            let mut term = SparsePoly::constant(c.clone());
            for slot in 0..self.ctx.len() {
                let e = m.exp(slot);
                match kept_slot[slot] {
                    Some(dst) => kept[dst] += e,
                    None if e > 0 => term = term.mul(&powers[slot][e as usize]),
                    None => {}
                }
            }
            let km = Monomial::from_exponents(&kept[..target.len()]);
            if term.len() == 1 {
                let (tm, tc) = term.terms()[0].clone();
                acc.push((tm.mul(km), tc));
            } else {
                result = result.add(&term.mul_term(km, &GaussianRational::one()));
            }
        }
        result = result.add(&SparsePoly::from_terms(acc));
        Ok(MultiPoly { ctx: target, poly: result })
    }

    /// Coefficients indexed by the given monomial list.
    pub fn coefficient_vector(&self, basis: &[Monomial]) -> Vec<GaussianRational> {
        basis.iter().map(|m| self.poly.coefficient(*m).cloned().unwrap_or_default()).collect()
    }

    /// Groups terms by their exponents in the slots of `outer`, returning
    /// `(outer monomial, coefficient polynomial in the remaining slots)`.
    pub fn split_by(&self, outer: VariableContext, inner: VariableContext) -> Result<Vec<(Monomial, MultiPoly)>> {
        let outer_slots: Vec<usize> = outer.vars().iter().map(|&v| self.ctx.require_slot(v)).collect::<Result<_>>()?;
        let inner_slots: Vec<usize> = inner.vars().iter().map(|&v| self.ctx.require_slot(v)).collect::<Result<_>>()?;
        if outer_slots.len() + inner_slots.len() != self.ctx.len() {
            return Err(Error::ContextMismatch(self.ctx.to_string(), format!("{outer} + {inner}")));
        }
        let mut groups: std::collections::BTreeMap<Monomial, Vec<(Monomial, GaussianRational)>> = Default::default();
        for (m, c) in self.terms() {
            let o: Vec<u32> = outer_slots.iter().map(|&s| m.exp(s)).collect();
            let i: Vec<u32> = inner_slots.iter().map(|&s| m.exp(s)).collect();
            groups.entry(Monomial::from_exponents(&o)).or_default().push((Monomial::from_exponents(&i), c.clone()));
        }
        Ok(groups.into_iter().rev().map(|(m, terms)| (m, MultiPoly::from_terms(inner, terms))).collect())
    }
}

struct PowerCache {
    rows: Vec<Vec<GaussianRational>>,
}

impl PowerCache {
    fn new(point: &[GaussianRational], degree: u32) -> Self {
        let rows = point
            .iter()
            .map(|v| {
                let mut row = vec![GaussianRational::one()];
                for k in 1..=degree as usize {
                    row.push(&row[k - 1] * v);
                }
                row
            })
            .collect();
        PowerCache { rows }
    }
}

/// All homogeneous monomials of a degree in the given context.
pub fn monomial_basis(ctx: VariableContext, degree: u32) -> Vec<Monomial> {
    monomials_of_degree(ctx.len(), degree)
}

/// Polynomial with the given coefficients on a monomial basis.
pub fn poly_from_coefficients(ctx: VariableContext, basis: &[Monomial], coeffs: &[GaussianRational]) -> MultiPoly {
    MultiPoly::from_terms(ctx, basis.iter().copied().zip(coeffs.iter().cloned()))
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let mono: Vec<String> = self
                .ctx
                .vars()
                .iter()
                .enumerate()
                .filter(|(s, _)| m.exp(*s) > 0)
                .map(|(s, v)| match m.exp(s) {
                    1 => v.name().to_string(),
                    e => format!("{}^{e}", v.name()),
                })
                .collect();
            let coeff = if c.is_real() { c.to_string() } else { format!("({c})") };
            let (sign, body) = match coeff.strip_prefix('-') {
                Some(rest) if c.is_real() => ("-", rest.to_string()),
                _ => ("+", coeff),
            };
            if k > 0 || sign == "-" {
                f.write_str(if k > 0 {
                    if sign == "-" {
                        " - "
                    } else {
                        " + "
                    }
                } else {
                    "-"
                })?;
            }
            if mono.is_empty() {
                f.write_str(&body)?;
            } else if body == "1" {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{body}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const XYZW: VariableContext = VariableContext::XYZW;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(XYZW, s).unwrap()
    }

    fn pt(v: &[i64]) -> Vec<GaussianRational> {
        v.iter().map(|&k| GaussianRational::from(k)).collect()
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(p("x^2+y^2+z^2+w^2").evaluate(&pt(&[1, 1, 1, 1])).unwrap(), 4.into());
        assert!(p("xw+zy").evaluate(&pt(&[0, 0, 1, 1])).unwrap().is_zero());
        assert!(p("x").evaluate(&pt(&[1, 2])).is_err());
    }

    #[test]
    fn partial_examples() {
        assert_eq!(p("x^2+y^2").partial(Var::X, 1).unwrap(), p("2x"));
        let f = p("xy(x^4-y^4)");
        let g = f.partial(Var::X, 1).unwrap().partial(Var::Y, 1).unwrap();
        assert_eq!(g, p("5x^4-5y^4"));
        assert!(f.partial(Var::Z, 7).unwrap().is_zero());
        assert!(f.partial_multi(&[3, 2, 1, 1]).is_zero());
        assert!(f.partial(Var::A, 1).is_err());
    }

    #[test]
    fn projection_substitution_lands_in_union_context() {
        let ctx = VariableContext::XYZW_ABCD;
        let curve = MultiPoly::parse(VariableContext::STU, "s^2 + t*u").unwrap();
        let curve = curve.embed(VariableContext::STU_ABCD).unwrap();
        let forms = ["a*y-b*x", "b*z-c*y", "c*w-d*z"].map(|s| MultiPoly::parse(ctx, s).unwrap());
        let assignment: Vec<(Var, Value)> =
            [Var::S, Var::T, Var::U].into_iter().zip(forms.into_iter().map(Value::Poly)).collect();
        let pulled = curve.substitute(ctx, &assignment).unwrap();
        assert_eq!(pulled.ctx(), ctx);
        assert!(pulled.is_homogeneous());
        assert_eq!(pulled.degree(), 4);
        // unknown variable in the assignment
        let bad = curve.substitute(ctx, &[(Var::X, Value::Scalar(1.into()))]);
        assert!(bad.is_err());
        // polynomial value living in a different context
        let stray = MultiPoly::parse(VariableContext::ABCD, "a").unwrap();
        assert!(curve.substitute(ctx, &[(Var::S, Value::Poly(stray))]).is_err());
    }

    #[test]
    fn display_roundtrips_through_parser() {
        for s in ["x^2 - 3*y*z + (1/2+1i)*w^3", "-x + 2", "0"] {
            let q = p(s);
            assert_eq!(p(&q.to_string()), q);
        }
    }

    #[test]
    fn split_by_recovers_coefficients() {
        let f = MultiPoly::parse(VariableContext::XYZW_ABCD, "xy(x^4-y^4)cd(c^4-d^4) + 5xz a^2").unwrap();
        let parts = f.split_by(VariableContext::XYZW, VariableContext::ABCD).unwrap();
        let x5y = Monomial::from_exponents(&[5, 1, 0, 0]);
        let coeff = parts.iter().find(|(m, _)| *m == x5y).unwrap();
        assert_eq!(coeff.1, MultiPoly::parse(VariableContext::ABCD, "cd(c^4-d^4)").unwrap());
    }
}
