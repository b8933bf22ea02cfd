use std::fmt;

use super::monomial::MAX_VARS;
use crate::error::{Error, Result};

/// Every variable name the library uses.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
    W,
    A,
    B,
    C,
    D,
    S,
    T,
    U,
}

impl Var {
    pub fn name(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
            Var::W => 'w',
            Var::A => 'a',
            Var::B => 'b',
            Var::C => 'c',
            Var::D => 'd',
            Var::S => 's',
            Var::T => 't',
            Var::U => 'u',
        }
    }

    pub fn from_name(c: char) -> Option<Var> {
        Some(match c {
            'x' => Var::X,
            'y' => Var::Y,
            'z' => Var::Z,
            'w' => Var::W,
            'a' => Var::A,
            'b' => Var::B,
            'c' => Var::C,
            'd' => Var::D,
            's' => Var::S,
            't' => Var::T,
            'u' => Var::U,
            _ => return None,
        })
    }
}

/// Ordered list of variables; the order fixes the monomial order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VariableContext {
    vars: [Var; MAX_VARS],
    len: u8,
}

impl VariableContext {
    pub const XYZW: VariableContext = VariableContext::from_array([Var::X, Var::Y, Var::Z, Var::W]);
    pub const ABCD: VariableContext = VariableContext::from_array([Var::A, Var::B, Var::C, Var::D]);
    pub const STU: VariableContext = VariableContext::from_array([Var::S, Var::T, Var::U]);
    pub const XYZW_ABCD: VariableContext =
        VariableContext::from_array([Var::X, Var::Y, Var::Z, Var::W, Var::A, Var::B, Var::C, Var::D]);
    pub const STU_ABCD: VariableContext =
        VariableContext::from_array([Var::S, Var::T, Var::U, Var::A, Var::B, Var::C, Var::D]);

    const fn from_array<const N: usize>(vs: [Var; N]) -> VariableContext {
        let mut vars = [Var::X; MAX_VARS];
        let mut k = 0;
        while k < N {
            vars[k] = vs[k];
            k += 1;
        }
        VariableContext { vars, len: N as u8 }
    }

    pub fn new(vs: &[Var]) -> Result<VariableContext> {
        if vs.len() > MAX_VARS {
            return Err(Error::Dimension(format!("{} variables exceed the limit of {MAX_VARS}", vs.len())));
        }
        for (k, v) in vs.iter().enumerate() {
            if vs[..k].contains(v) {
                return Err(Error::Dimension(format!("variable {v:?} repeated")));
            }
        }
        let mut vars = [Var::X; MAX_VARS];
        vars[..vs.len()].copy_from_slice(vs);
        Ok(VariableContext { vars, len: vs.len() as u8 })
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars[..self.len as usize]
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn slot(&self, v: Var) -> Option<usize> {
        self.vars().iter().position(|&u| u == v)
    }

    pub fn require_slot(&self, v: Var) -> Result<usize> {
        self.slot(v).ok_or_else(|| Error::UnknownVariable(v, self.to_string()))
    }

    /// Variables of `self` followed by the variables of `other` not already present.
    pub fn union(&self, other: &VariableContext) -> Result<VariableContext> {
        let mut vs: Vec<Var> = self.vars().to_vec();
        for &v in other.vars() {
            if !vs.contains(&v) {
                vs.push(v);
            }
        }
        VariableContext::new(&vs)
    }

    pub fn contains_all(&self, other: &VariableContext) -> bool {
        other.vars().iter().all(|&v| self.slot(v).is_some())
    }
}

impl fmt::Display for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: String = self.vars().iter().map(|v| v.name()).collect();
        write!(f, "{{{names}}}")
    }
}

impl fmt::Debug for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_keeps_order() {
        let u = VariableContext::STU.union(&VariableContext::ABCD).unwrap();
        assert_eq!(u, VariableContext::STU_ABCD);
        let u = VariableContext::XYZW.union(&VariableContext::XYZW_ABCD).unwrap();
        assert_eq!(u, VariableContext::XYZW_ABCD);
        assert!(VariableContext::STU.union(&VariableContext::XYZW_ABCD).is_err());
        assert_eq!(VariableContext::XYZW_ABCD.to_string(), "{xyzwabcd}");
    }
}
