//! Text and JSON encodings of polynomials.
//!
//! The text form is `3*r1^2 + 2*r1*r2 + r2^2`: `*` for products, `^` for
//! non-negative integer powers, literal fractions such as `10125/4`, and
//! parentheses. Printing always produces the expanded canonical form.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::polynomial::Polynomial;
use super::term::Term;
use super::var::{Space, Var};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, to_fraction_string, Rational};

/// Display order: higher total degree first, then lex with index 1 (and
/// earlier spaces) most significant.
pub fn display_cmp(a: &Term, b: &Term) -> Ordering {
    b.degree().cmp(&a.degree()).then_with(|| {
        let (xa, xb) = (a.exps(), b.exps());
        for (pa, pb) in xa.iter().zip(xb.iter()) {
            if pa.0 != pb.0 {
                return if pa.0 < pb.0 { Ordering::Less } else { Ordering::Greater };
            }
            if pa.1 != pb.1 {
                return pb.1.cmp(&pa.1);
            }
        }
        xb.len().cmp(&xa.len())
    })
}

fn fmt_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Term, &Rational)> = self.terms().collect();
        terms.sort_by(|a, b| display_cmp(a.0, b.0));
        for (i, (t, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.is_one() {
                write!(f, "{}", fmt_coeff(&abs))?;
            } else if abs.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{}*{t}", fmt_coeff(&abs))?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Polynomial> {
        parse(s)
    }
}

pub fn parse(s: &str) -> Result<Polynomial> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.product()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc += &self.product()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc -= &self.product()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.uint()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(BigInt::from_str(s).expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.uint()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    return Ok(Polynomial::constant(Rational::new(num, den)));
                }
                Ok(Polynomial::constant(Rational::from_integer(num)))
            }
            Some(c) => {
                let space = Space::from_letter(c as char)
                    .ok_or_else(|| self.err("expected a variable (x|r|z|k|y), number or '('"))?;
                self.pos += 1;
                let idx = self.uint()?;
                let idx = u32::try_from(idx).map_err(|_| self.err("index too large"))?;
                if idx == 0 {
                    return Err(self.err("variable indices start at 1"));
                }
                Ok(Polynomial::var(Var::new(space, idx)))
            }
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// One entry of the JSON encoding.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonTerm {
    pub coeff: String,
    pub exps: BTreeMap<String, u32>,
}

pub fn to_json_terms(p: &Polynomial) -> Vec<JsonTerm> {
    let mut terms: Vec<(&Term, &Rational)> = p.terms().collect();
    terms.sort_by(|a, b| display_cmp(a.0, b.0));
    terms
        .into_iter()
        .map(|(t, c)| JsonTerm {
            coeff: to_fraction_string(c),
            exps: t.exps().iter().map(|(v, e)| (v.to_string(), *e)).collect(),
        })
        .collect()
}

pub fn from_json_terms(terms: &[JsonTerm]) -> Result<Polynomial> {
    let mut p = Polynomial::zero();
    for jt in terms {
        let c = parse_rational(&jt.coeff)?;
        let mut pairs = Vec::new();
        for (name, e) in &jt.exps {
            let v = match parse(name)?.into_terms().next() {
                Some((t, c)) if c.is_one() && t.exps().len() == 1 && t.exps()[0].1 == 1 => {
                    t.exps()[0].0
                }
                _ => return Err(Error::Parse { pos: 0, msg: format!("bad variable name {name:?}") }),
            };
            pairs.push((v, *e));
        }
        p.add_term(Term::from_pairs(pairs), c);
    }
    Ok(p)
}

pub fn to_json(p: &Polynomial) -> String {
    serde_json::to_string(&to_json_terms(p)).expect("json encoding")
}

pub fn from_json(s: &str) -> Result<Polynomial> {
    let terms: Vec<JsonTerm> = serde_json::from_str(s)?;
    from_json_terms(&terms)
}
