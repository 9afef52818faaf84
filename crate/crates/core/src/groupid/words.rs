//! Words in named generators: `name`, `(word)`, `x^k` with `k` possibly
//! negative, juxtaposed or joined by `*`; `lhs = rhs` means `lhs·rhs^-1`.
//! Products are matrix products in written order.

use crate::error::{Error, Result};
use crate::projlinear::{FinGroup, ProjMat};

struct Reader<'a> {
    g: &'a FinGroup,
    chars: Vec<char>,
    at: usize,
}

impl Reader<'_> {
    fn skip_ws(&mut self) {
        while self.at < self.chars.len() && (self.chars[self.at].is_whitespace() || self.chars[self.at] == '*') {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.at).copied()
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax { pos: self.at, msg: msg.into() })
    }

    fn word(&mut self) -> Result<ProjMat> {
        let mut acc = ProjMat::identity();
        while let Some(c) = self.peek() {
            if c == ')' || c == '=' {
                break;
            }
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<ProjMat> {
        let base = match self.peek() {
            Some('(') => {
                self.at += 1;
                let w = self.word()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.at += 1;
                w
            }
            Some(c) if c.is_alphabetic() => {
                let start = self.at;
                while self.at < self.chars.len() && (self.chars[self.at].is_alphanumeric() || self.chars[self.at] == '_') {
                    self.at += 1;
                }
                let name: String = self.chars[start..self.at].iter().collect();
                let k = self
                    .g
                    .generator_names()
                    .iter()
                    .position(|n| *n == name)
                    .ok_or(Error::UnknownGenerator(name))?;
                self.g.generators()[k].clone()
            }
            _ => return self.err("expected a generator or '('"),
        };
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.at += 1;
        self.skip_ws();
        let start = self.at;
        if self.chars.get(self.at) == Some(&'-') {
            self.at += 1;
        }
        while self.at < self.chars.len() && self.chars[self.at].is_ascii_digit() {
            self.at += 1;
        }
        let s: String = self.chars[start..self.at].iter().collect();
        let e: i64 = match s.parse() {
            Ok(e) => e,
            Err(_) => return self.err("expected an integer exponent"),
        };
        let b = if e < 0 { base.inverse() } else { base };
        Ok(b.pow(e.unsigned_abs()))
    }
}

/// Evaluates a relation to a matrix.
pub fn evaluate_word(g: &FinGroup, word: &str) -> Result<ProjMat> {
    let mut r = Reader { g, chars: word.chars().collect(), at: 0 };
    let lhs = r.word()?;
    let out = if r.peek() == Some('=') {
        r.at += 1;
        let rhs = r.word()?;
        lhs.mul(&rhs.inverse())
    } else {
        lhs
    };
    if r.peek().is_some() {
        return r.err("unexpected trailing input");
    }
    Ok(out)
}

/// Whether every relation evaluates to the projective identity.
pub fn verify_presentation(g: &FinGroup, relations: &[&str]) -> Result<bool> {
    for rel in relations {
        if !evaluate_word(g, rel)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}
