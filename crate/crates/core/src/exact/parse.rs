//! Expression parser for polynomials: `+ - * / ^`, parentheses, implicit
//! multiplication (`xy`, `2x^3`, `5i`), single-letter variables and the
//! imaginary unit `i`. Division is only allowed by nonzero constants.

use num_bigint::BigInt;

use super::context::{Var, VariableContext};
use super::gaussian::GaussianRational;
use super::poly::MultiPoly;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
    ctx: VariableContext,
}

pub(crate) fn parse_poly(ctx: VariableContext, src: &str) -> Result<MultiPoly> {
    let mut p = Parser { src, chars: src.chars().collect(), pos: 0, ctx };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.err(format!("unexpected `{}`", p.chars[p.pos])));
    }
    Ok(e)
}

impl Parser<'_> {
    fn err(&self, reason: String) -> Error {
        Error::Parse {
            what: "polynomial",
            input: self.src.to_string(),
            reason: format!("{reason} at offset {}", self.pos),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    let c = d.as_constant().ok_or_else(|| self.err("division by a non-constant".into()))?;
                    let inv = c.inv().map_err(|_| self.err("division by zero".into()))?;
                    acc = acc.scale(&inv);
                }
                Some(c) if c == '(' || c.is_ascii_alphanumeric() => acc = acc.mul(&self.power()?),
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer".into()));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(MultiPoly::constant(self.ctx, GaussianRational::from(n)))
            }
            Some('i') => {
                self.pos += 1;
                Ok(MultiPoly::constant(self.ctx, GaussianRational::i()))
            }
            Some(c) => match Var::from_name(c) {
                Some(v) => {
                    self.pos += 1;
                    MultiPoly::var(self.ctx, v)
                }
                None => Err(self.err(format!("unexpected `{c}`"))),
            },
            None => Err(self.err("unexpected end of input".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(VariableContext::XYZW, s).unwrap()
    }

    #[test]
    fn implicit_multiplication_and_powers() {
        assert_eq!(p("xy(x^4-y^4)"), p("x^5*y - x*y^5"));
        assert_eq!(p("2x^3"), p("2*x*x*x"));
        assert_eq!(p("-x^2"), p("0 - x*x"));
        assert_eq!(p("(1+i)/2*x"), p("x/2 + i*x/2"));
        assert_eq!(p("5i z").coefficient(&[0, 0, 1, 0]), GaussianRational::from_ints(0, 5));
    }

    #[test]
    fn rejects_bad_input() {
        let ctx = VariableContext::XYZW;
        for bad in ["x+", "(x", "x/y", "x/0", "a", "x^", "x$"] {
            assert!(MultiPoly::parse(ctx, bad).is_err(), "{bad}");
        }
    }
}
