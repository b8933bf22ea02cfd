//! Packed exponent vectors.
//!
//! Layout: the top byte holds the total degree, followed by eight 7-bit
//! exponent slots with slot 0 most significant. Comparing the raw `u64`
//! therefore yields graded lexicographic order with slot 0 > slot 1 > ...

use std::fmt;

pub const MAX_VARS: usize = 8;
const SLOT_BITS: u32 = 7;
const SLOT_MASK: u64 = (1 << SLOT_BITS) - 1;
const TOTAL_SHIFT: u32 = 56;

/// Largest total degree for which products can never overflow a slot.
pub const MAX_PRODUCT_DEGREE: u32 = 127;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(u64);

#[inline]
fn shift(slot: usize) -> u32 {
    debug_assert!(slot < MAX_VARS);
    (MAX_VARS - 1 - slot) as u32 * SLOT_BITS
}

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS);
        let mut raw = 0u64;
        let mut total = 0u64;
        for (slot, &e) in exps.iter().enumerate() {
            assert!(e as u64 <= SLOT_MASK, "exponent {e} too large");
            raw |= (e as u64) << shift(slot);
            total += e as u64;
        }
        assert!(total < 256, "total degree {total} too large");
        Monomial(raw | (total << TOTAL_SHIFT))
    }

    pub fn var(slot: usize, exp: u32) -> Monomial {
        let mut e = [0u32; MAX_VARS];
        e[slot] = exp;
        Monomial::from_exponents(&e)
    }

    #[inline]
    pub fn raw(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn degree(self) -> u32 {
        (self.0 >> TOTAL_SHIFT) as u32
    }

    #[inline]
    pub fn exp(self, slot: usize) -> u32 {
        ((self.0 >> shift(slot)) & SLOT_MASK) as u32
    }

    pub fn exponents(self) -> [u32; MAX_VARS] {
        std::array::from_fn(|s| self.exp(s))
    }

    /// Product; callers guarantee the degree bound (see `MAX_PRODUCT_DEGREE`).
    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial(self.0 + other.0)
    }

    pub fn divides(self, other: Monomial) -> bool {
        (0..MAX_VARS).all(|s| self.exp(s) <= other.exp(s))
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(self, other: Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial(other.0 - self.0))
    }

    /// Lower the exponent in `slot` by `by`, returning `None` if it is too small.
    pub fn lower(self, slot: usize, by: u32) -> Option<Monomial> {
        if self.exp(slot) < by {
            return None;
        }
        Some(Monomial(self.0 - ((by as u64) << shift(slot)) - ((by as u64) << TOTAL_SHIFT)))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

/// All exponent vectors of total degree `degree` in `nvars` variables, in
/// descending graded lexicographic order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(slot: usize, nvars: usize, left: u32, cur: &mut [u32; MAX_VARS], out: &mut Vec<Monomial>) {
        if slot + 1 == nvars {
            cur[slot] = left;
            out.push(Monomial::from_exponents(&cur[..nvars]));
            return;
        }
        for e in (0..=left).rev() {
            cur[slot] = e;
            rec(slot + 1, nvars, left - e, cur, out);
        }
        cur[slot] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::ONE);
        }
        return out;
    }
    rec(0, nvars, degree, &mut [0; MAX_VARS], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_graded_lex() {
        let x2 = Monomial::from_exponents(&[2, 0, 0, 0]);
        let xy = Monomial::from_exponents(&[1, 1, 0, 0]);
        let y3 = Monomial::from_exponents(&[0, 3, 0, 0]);
        let w2 = Monomial::from_exponents(&[0, 0, 0, 2]);
        assert!(y3 > x2 && x2 > xy && xy > w2);
    }

    #[test]
    fn arithmetic() {
        let a = Monomial::from_exponents(&[1, 2, 0, 3]);
        let b = Monomial::from_exponents(&[0, 1, 4, 0]);
        let p = a.mul(b);
        assert_eq!(p.exponents()[..4], [1, 3, 4, 3]);
        assert_eq!(p.degree(), 11);
        assert_eq!(a.quotient_of(p), Some(b));
        assert_eq!(b.quotient_of(a), None);
        assert_eq!(a.lower(3, 2), Some(Monomial::from_exponents(&[1, 2, 0, 1])));
        assert_eq!(a.lower(2, 1), None);
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(monomials_of_degree(4, 6).len(), 84);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        let m = monomials_of_degree(4, 2);
        assert!(m.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(m[0], Monomial::from_exponents(&[2, 0, 0, 0]));
    }
}
