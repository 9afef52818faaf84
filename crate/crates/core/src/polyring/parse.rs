//! Recursive-descent reader for the expression language.
//!
//! ```text
//! expr  := ['+'|'-'] term (('+'|'-') term)*
//! term  := power (['*'] power | '/' INT)*
//! power := atom ['^' INT]
//! atom  := INT | var | param | 'E' '(' INT ')' | '(' expr ')' | '-' power
//! ```
//!
//! Identifiers made only of the letters `X`, `Y`, `Z` are read as products of
//! variables, so `XY^2` means `X*Y^2`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::param::ParamPoly;
use super::{HomPoly, Monomial3};
use crate::cyclotomic::{CycNum, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    End,
}

fn lex(text: &str, offset: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = offset + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Int(s.parse().expect("digits")), pos));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), pos));
            i += 1;
        } else {
            return Err(Error::Syntax { pos, msg: format!("unexpected character '{c}'") });
        }
    }
    out.push((Tok::End, offset + chars.len()));
    Ok(out)
}

/// Polynomial in `X, Y, Z` that is not yet known to be homogeneous.
type Poly = BTreeMap<Monomial3, ParamPoly>;

fn p_const(c: ParamPoly) -> Poly {
    let mut p = Poly::new();
    if !c.is_zero() {
        p.insert(Monomial3::new(0, 0, 0), c);
    }
    p
}

fn p_add(a: &Poly, b: &Poly, sign: i64) -> Poly {
    let mut out = a.clone();
    for (m, c) in b {
        let c = if sign < 0 { -c } else { c.clone() };
        let e = out.entry(*m).or_default();
        *e = &*e + &c;
        if e.is_zero() {
            out.remove(m);
        }
    }
    out
}

fn p_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (m1, c1) in a {
        for (m2, c2) in b {
            let m = m1.mul(m2);
            let e = out.entry(m).or_default();
            *e = &*e + &(c1 * c2);
            if e.is_zero() {
                out.remove(&m);
            }
        }
    }
    out
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(v)
            }
            _ => self.err("expected a non-negative integer literal"),
        }
    }

    fn small_int(&mut self, what: &str) -> Result<u32> {
        let pos = self.pos();
        let v = self.int()?;
        v.to_u32().ok_or(Error::Syntax { pos, msg: format!("{what} too large") })
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Tok::Sym('+') => {
                self.bump();
                self.term()?
            }
            Tok::Sym('-') => {
                self.bump();
                p_add(&Poly::new(), &self.term()?, -1)
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    acc = p_add(&acc, &self.term()?, 1);
                }
                Tok::Sym('-') => {
                    self.bump();
                    acc = p_add(&acc, &self.term()?, -1);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    acc = p_mul(&acc, &self.power()?);
                }
                Tok::Sym('/') => {
                    self.bump();
                    let pos = self.pos();
                    let d = self.int()?;
                    if d.is_zero() {
                        return Err(Error::Syntax { pos, msg: "division by zero".into() });
                    }
                    let inv = CycNum::from_rational(&Rational::new(1.into(), d));
                    acc = p_mul(&acc, &p_const(ParamPoly::constant(inv)));
                }
                Tok::Ident(_) | Tok::Int(_) | Tok::Sym('(') => {
                    acc = p_mul(&acc, &self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if *self.peek() != Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        let e = self.small_int("exponent")?;
        let mut acc = p_const(ParamPoly::constant(CycNum::one()));
        for _ in 0..e {
            acc = p_mul(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Poly> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(v) => Ok(p_const(ParamPoly::constant(CycNum::from_bigint(v)))),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Sym('-') => Ok(p_add(&Poly::new(), &self.power()?, -1)),
            Tok::Ident(name) if name == "E" && *self.peek() == Tok::Sym('(') => {
                self.bump();
                let npos = self.pos();
                let n = self.small_int("conductor")?;
                if n == 0 {
                    return Err(Error::Syntax { pos: npos, msg: "E(0) is undefined".into() });
                }
                self.expect_sym(')')?;
                Ok(p_const(ParamPoly::constant(CycNum::root_of_unity(n, 1))))
            }
            Tok::Ident(name) if name.chars().all(|c| "XYZ".contains(c)) => {
                let mut e = [0u32; 3];
                for c in name.chars() {
                    e["XYZ".find(c).unwrap()] += 1;
                }
                let mut p = Poly::new();
                p.insert(Monomial3(e), ParamPoly::constant(CycNum::one()));
                Ok(p)
            }
            Tok::Ident(name) if name.starts_with(|c: char| c.is_ascii_lowercase()) => {
                Ok(p_const(ParamPoly::param(&name)))
            }
            Tok::Ident(name) => Err(Error::UnknownSymbol(name)),
            Tok::End => Err(Error::Syntax { pos, msg: "unexpected end of input".into() }),
            Tok::Sym(c) => Err(Error::Syntax { pos, msg: format!("unexpected '{c}'") }),
        }
    }
}

fn parse_poly(text: &str, offset: usize) -> Result<Poly> {
    let toks = lex(text, offset)?;
    let mut p = Parser { toks, at: 0 };
    if *p.peek() == Tok::End {
        return p.err("empty expression");
    }
    let poly = p.expr()?;
    if *p.peek() != Tok::End {
        return p.err("unexpected token");
    }
    Ok(poly)
}

/// Parses a homogeneous expression; `offset` shifts reported positions.
pub(crate) fn parse_hompoly_at(text: &str, offset: usize) -> Result<HomPoly> {
    let poly = parse_poly(text, offset)?;
    let mut degree = None;
    for m in poly.keys() {
        match degree {
            None => degree = Some(m.degree()),
            Some(d) if d != m.degree() => {
                return Err(Error::NotHomogeneous(d.max(m.degree()), d.min(m.degree())))
            }
            _ => {}
        }
    }
    HomPoly::from_terms(degree.unwrap_or(0), poly)
}

impl HomPoly {
    /// Reads the expression language; errors on syntax, unknown symbols and
    /// mixed degrees. The zero polynomial has degree 0.
    pub fn parse(text: &str) -> Result<HomPoly> {
        parse_hompoly_at(text, 0)
    }
}

/// Reads a parameter-free constant such as `2`, `-1/3` or `1+E(5)^2`.
pub fn parse_constant(text: &str) -> Result<CycNum> {
    let f = parse_hompoly_at(text, 0)?;
    if f.degree() != 0 {
        return Err(Error::NotNumeric);
    }
    match f.coeff(&Monomial3::new(0, 0, 0)) {
        None => Ok(CycNum::zero()),
        Some(c) => c.as_constant().ok_or(Error::NotNumeric),
    }
}

/// Reads a polynomial in the parameters alone, such as `b20^2 - 20`.
pub fn parse_param_poly(text: &str) -> Result<ParamPoly> {
    let f = parse_hompoly_at(text, 0)?;
    if f.degree() != 0 {
        return Err(Error::NotHomogeneous(0, f.degree()));
    }
    Ok(f.coeff(&Monomial3::new(0, 0, 0)).cloned().unwrap_or_default())
}
