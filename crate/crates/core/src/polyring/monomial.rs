use std::fmt;

use serde::{Serialize, Serializer};

/// `X^i Y^j Z^k`, stored as `[i, j, k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial3(pub [u32; 3]);

impl Monomial3 {
    pub const fn new(i: u32, j: u32, k: u32) -> Monomial3 {
        Monomial3([i, j, k])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Largest single exponent, `max{i, j, k}`.
    pub fn exponent(&self) -> u32 {
        *self.0.iter().max().unwrap()
    }

    pub fn mul(&self, o: &Monomial3) -> Monomial3 {
        Monomial3([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }

    pub fn divides(&self, o: &Monomial3) -> bool {
        (0..3).all(|v| self.0[v] <= o.0[v])
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial3) -> Monomial3 {
        Monomial3([o.0[0] - self.0[0], o.0[1] - self.0[1], o.0[2] - self.0[2]])
    }

    pub fn lcm(&self, o: &Monomial3) -> Monomial3 {
        Monomial3([0, 1, 2].map(|v| self.0[v].max(o.0[v])))
    }

    /// Pure power of variable `v` of degree `d`.
    pub fn pure(v: usize, d: u32) -> Monomial3 {
        let mut e = [0; 3];
        e[v] = d;
        Monomial3(e)
    }

    /// All monomials of degree `d` in graded-lex order, `X^d` first.
    pub fn all_of_degree(d: u32) -> Vec<Monomial3> {
        let mut out = Vec::new();
        for i in (0..=d).rev() {
            for j in (0..=d - i).rev() {
                out.push(Monomial3::new(i, j, d - i - j));
            }
        }
        out
    }
}

impl fmt::Display for Monomial3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (v, name) in ["X", "Y", "Z"].iter().enumerate() {
            match self.0[v] {
                0 => {}
                1 => parts.push(name.to_string()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl Serialize for Monomial3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
