//! Context-free sparse polynomials over an exact coefficient ring.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use super::monomial::{Monomial, MAX_PRODUCT_DEGREE};
use super::ring::Ring;

/// Terms sorted by strictly descending monomial, no zero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct SparsePoly<R> {
    terms: Vec<(Monomial, R)>,
}

impl<R: Ring> Default for SparsePoly<R> {
    fn default() -> Self {
        SparsePoly { terms: Vec::new() }
    }
}

impl<R: Ring> SparsePoly<R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn monomial(m: Monomial, c: R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePoly { terms: vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, R)>) -> Self {
        let mut acc: BTreeMap<Monomial, R> = BTreeMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(v) => v.add_to(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_sorted_map(acc)
    }

    fn from_sorted_map(acc: BTreeMap<Monomial, R>) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        SparsePoly { terms }
    }

    fn from_hash_map(acc: FxHashMap<Monomial, R>) -> Self {
        let mut terms: Vec<(Monomial, R)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        SparsePoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, R)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, R)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, R)> {
        self.terms.first()
    }

    /// Maximum total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn coefficient(&self, m: Monomial) -> Option<&R> {
        self.terms.binary_search_by(|(k, _)| m.cmp(k)).ok().map(|i| &self.terms[i].1)
    }

    pub fn map_coefficients<S: Ring>(&self, f: impl Fn(&R) -> S) -> SparsePoly<S> {
        SparsePoly { terms: self.terms.iter().map(|(m, c)| (*m, f(c))).filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn map_monomials(&self, f: impl Fn(Monomial) -> Monomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(*m), c.clone())))
    }

    fn merge(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &rhs.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate_rhs { b[j].1.negate() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_rhs { a[i].1.minus(&b[j].1) } else { a[i].1.plus(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, if negate_rhs { c.negate() } else { c.clone() })));
        SparsePoly { terms: out }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.merge(rhs, false)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.merge(rhs, true)
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(|c| c.negate())
    }

    pub fn scale(&self, k: &R) -> Self {
        self.map_coefficients(|c| c.times(k))
    }

    pub fn mul_term(&self, m: Monomial, k: &R) -> Self {
        SparsePoly {
            terms: self.terms.iter().map(|(mm, c)| (mm.mul(m), c.times(k))).filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn check_degree(&self, rhs: &Self) {
        assert!(self.degree() + rhs.degree() <= MAX_PRODUCT_DEGREE, "product degree exceeds the packed monomial range");
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        self.check_degree(rhs);
        if self.terms.len() == 1 {
            return rhs.mul_term(self.terms[0].0, &self.terms[0].1);
        }
        if rhs.terms.len() == 1 {
            return self.mul_term(rhs.terms[0].0, &rhs.terms[0].1);
        }
        let mut acc: FxHashMap<Monomial, R> = FxHashMap::default();
        acc.reserve(self.terms.len() * rhs.terms.len() / 2);
        accumulate_product(&mut acc, self, rhs, false);
        Self::from_hash_map(acc)
    }

    /// `a*b - c*d` in one accumulation pass.
    pub fn mul_sub_mul(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let mut acc: FxHashMap<Monomial, R> = FxHashMap::default();
        if !a.is_zero() && !b.is_zero() {
            a.check_degree(b);
            accumulate_product(&mut acc, a, b, false);
        }
        if !c.is_zero() && !d.is_zero() {
            c.check_degree(d);
            accumulate_product(&mut acc, c, d, true);
        }
        Self::from_hash_map(acc)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(R::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / rhs`, or `None` if `rhs` does not divide `self`.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (lm, lc) = rhs.terms.first()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if rhs.terms.len() == 1 {
            let terms = self
                .terms
                .iter()
                .map(|(m, c)| Some((lm.quotient_of(*m)?, c.div_exact(lc)?)))
                .collect::<Option<Vec<_>>>()?;
            return Some(SparsePoly { terms });
        }
        let mut rem: BTreeMap<Monomial, R> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = lm.quotient_of(m)?;
            let qc = c.div_exact(lc)?;
            for (bm, bc) in &rhs.terms[1..] {
                let key = bm.mul(qm);
                let prod = bc.times(&qc);
                match rem.get_mut(&key) {
                    Some(v) => {
                        v.sub_from(&prod);
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, prod.negate());
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Some(SparsePoly { terms: quotient })
    }

    /// Formal partial derivative with respect to `slot`, `order` times.
    pub fn partial(&self, slot: usize, order: u32) -> Self
    where
        R: From<i64>,
    {
        if order == 0 {
            return self.clone();
        }
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exp(slot);
            let lowered = m.lower(slot, order)?;
            let falling: i64 = (0..order).map(|k| (e - k) as i64).product();
            Some((lowered, c.times(&R::from(falling))))
        });
        // lowering one slot by a fixed amount preserves the term order
        SparsePoly { terms: terms.filter(|(_, c)| !c.is_zero()).collect() }
    }
}

fn accumulate_product<R: Ring>(acc: &mut FxHashMap<Monomial, R>, a: &SparsePoly<R>, b: &SparsePoly<R>, negate: bool) {
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let key = ma.mul(*mb);
            let mut prod = ca.times(cb);
            if negate {
                prod = prod.negate();
            }
            match acc.get_mut(&key) {
                Some(v) => v.add_to(&prod),
                None => {
                    acc.insert(key, prod);
                }
            }
        }
    }
}

impl<R: Ring> Ring for SparsePoly<R> {
    fn zero() -> Self {
        SparsePoly::zero()
    }
    fn one() -> Self {
        SparsePoly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        SparsePoly::div_exact(self, rhs)
    }
    fn mul_sub_mul(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        SparsePoly::mul_sub_mul(a, b, c, d)
    }
    fn support(&self) -> usize {
        self.terms.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(terms: &[(&[u32], i64)]) -> SparsePoly<BigInt> {
        SparsePoly::from_terms(terms.iter().map(|(e, c)| (Monomial::from_exponents(e), BigInt::from(*c))))
    }

    #[test]
    fn product_and_exact_quotient() {
        // (x + y)(x - y) = x^2 - y^2
        let a = p(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = p(&[(&[1, 0], 1), (&[0, 1], -1)]);
        let prod = a.mul(&b);
        assert_eq!(prod, p(&[(&[2, 0], 1), (&[0, 2], -1)]));
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        // x^2 + 1 is not a multiple of x + y
        let c = p(&[(&[2, 0], 1), (&[0, 0], 1)]);
        assert_eq!(c.div_exact(&a), None);
    }

    #[test]
    fn mul_sub_mul_matches_separate_products() {
        let a = p(&[(&[1, 0, 2], 3), (&[0, 1, 0], -2)]);
        let b = p(&[(&[2, 1, 0], 1), (&[0, 0, 0], 5)]);
        let c = p(&[(&[0, 2, 1], 7)]);
        let d = p(&[(&[1, 1, 1], -1), (&[0, 0, 1], 4)]);
        let expect = a.mul(&b).sub(&c.mul(&d));
        assert_eq!(SparsePoly::mul_sub_mul(&a, &b, &c, &d), expect);
    }

    #[test]
    fn derivative() {
        // d/dx d/dx (x^3 y) = 6 x y
        let f = p(&[(&[3, 1], 1)]);
        assert_eq!(f.partial(0, 2), p(&[(&[1, 1], 6)]));
        assert!(f.partial(1, 2).is_zero());
    }
}
