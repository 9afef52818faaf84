//! Cyclic types `m,(a,b)`: admissible orders, canonical representatives,
//! eigenclasses of monomials and the enumeration of types carrying smooth
//! curves.
//!
//! The type `m,(a,b)` stands for `diag(1, E(m)^a, E(m)^b)`. Two types are
//! identified when their weight vectors `(0, a, b)` agree after a unit
//! scaling mod `m`, a constant shift and a permutation of the coordinates.

mod enumerate;
mod reference;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

pub use enumerate::{
    default_pool, enumerate_smooth_types, enumerate_types, enumerate_types_within, FamilyStatus, TypeFamily,
};
pub use reference::{matches_reference, quintic_reference_types, ReferenceType};

use crate::error::{Error, Result};
use crate::polyring::Monomial3;
use crate::projlinear::{MonomialMat, ProjMat};

/// Type `m,(a,b)` of `diag(1, E(m)^a, E(m)^b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicType {
    pub m: u32,
    pub a: u32,
    pub b: u32,
}

impl CyclicType {
    /// The diagonal matrix this type names.
    pub fn matrix(&self) -> ProjMat {
        ProjMat::diag_roots(self.m, [0, self.a as i64, self.b as i64])
    }

    /// Whether one coordinate weight vanishes after canonicalization, i.e.
    /// the element fixes a line pointwise.
    pub fn is_homology(&self) -> bool {
        self.m > 1 && self.a == 0
    }
}

impl fmt::Display for CyclicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},({},{})", self.m, self.a, self.b)
    }
}

impl FromStr for CyclicType {
    type Err = Error;

    /// Reads `m,(a,b)`; whitespace is ignored and the parentheses are
    /// optional. The triple is taken as given, not canonicalized.
    fn from_str(s: &str) -> Result<CyclicType> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |pos: usize, msg: &str| Error::Syntax { pos, msg: msg.to_string() };
        let (m, rest) = compact.split_once(',').ok_or_else(|| bad(0, "expected `m,(a,b)`"))?;
        let inner = match rest.strip_prefix('(') {
            Some(r) => r.strip_suffix(')').ok_or_else(|| bad(compact.len(), "missing `)`"))?,
            None => rest,
        };
        let (a, b) = inner.split_once(',').ok_or_else(|| bad(m.len() + 1, "expected `(a,b)`"))?;
        let num = |t: &str, pos: usize| t.parse::<u32>().map_err(|_| bad(pos, &format!("bad integer `{t}`")));
        let m = num(m, 0)?;
        if m == 0 {
            return Err(bad(0, "order must be positive"));
        }
        Ok(CyclicType { m, a: num(a, 0)? % m, b: num(b, 0)? % m })
    }
}

impl Serialize for CyclicType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |k| n % k == 0)
}

/// Orders a cyclic automorphism of a smooth plane curve of degree `d` can
/// have: the divisors of `d`, `d-1`, `d(d-1)`, `(d-1)^2`, `d(d-2)` and
/// `d^2-3d+3`.
pub fn admissible_orders(d: u32) -> Result<Vec<u32>> {
    if d < 4 {
        return Err(Error::DegreeTooSmall { min: 4, got: d });
    }
    let d = d as u64;
    let bounds = [d, d - 1, d * (d - 1), (d - 1) * (d - 1), d * (d - 2), d * d - 3 * d + 3];
    let mut out: Vec<u32> = bounds.iter().flat_map(|&n| divisors(n)).map(|k| k as u32).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Least common multiple of the admissible orders; every monomial
/// automorphism of finite order has entries in this cyclotomic field.
pub fn full_conductor(d: u32) -> Result<u32> {
    Ok(admissible_orders(d)?.into_iter().fold(1, |l, k| l.lcm(&k)))
}

/// Exponent by which `diag(1, E(m)^a, E(m)^b)` scales the monomial.
pub fn weight(mono: &Monomial3, t: &CyclicType) -> u32 {
    let m = t.m as u64;
    ((t.a as u64 * mono.0[1] as u64 + t.b as u64 * mono.0[2] as u64) % m) as u32
}

/// Degree-`d` monomials grouped by weight; empty classes are omitted.
pub fn eigenclasses(d: u32, t: &CyclicType) -> BTreeMap<u32, Vec<Monomial3>> {
    let mut out: BTreeMap<u32, Vec<Monomial3>> = BTreeMap::new();
    for mono in Monomial3::all_of_degree(d) {
        out.entry(weight(&mono, t)).or_default().push(mono);
    }
    out
}

/// Projective order of `diag(1, E(m)^a, E(m)^b)`.
pub fn projective_order(m: u32, a: u32, b: u32) -> u32 {
    m / m.gcd(&a).gcd(&b)
}

pub(crate) const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Representatives `(a, b)` with `a < b` reachable from the weight vector
/// `(0, a, b)` by the identifying moves.
pub(crate) fn orbit(m: u32, a: u32, b: u32) -> Vec<(u32, u32)> {
    let w = [0, a % m, b % m];
    let mut out = Vec::new();
    for u in (1..=m).filter(|u| u.gcd(&m) == 1) {
        for p in &PERMS {
            let v = p.map(|i| (u as u64 * w[i] as u64 % m as u64) as u32);
            let x = (v[1] + m - v[0]) % m;
            let y = (v[2] + m - v[0]) % m;
            if x < y {
                out.push((x, y));
            }
        }
    }
    out
}

/// Canonical representative: the lexicographically least `(a, b)` with
/// `a < b` in the orbit. The identity is `1,(0,0)`.
pub fn canonical_type(m: u32, a: u32, b: u32) -> Result<CyclicType> {
    if m == 0 || projective_order(m, a, b) != m {
        return Err(Error::BadType { m, a, b });
    }
    if m == 1 {
        return Ok(CyclicType { m: 1, a: 0, b: 0 });
    }
    let (a, b) = orbit(m, a, b).into_iter().min().expect("a nontrivial orbit has a pair with a < b");
    Ok(CyclicType { m, a, b })
}

/// All canonical types of order exactly `m`.
pub fn canonical_types_of_order(m: u32) -> Vec<CyclicType> {
    if m == 1 {
        return vec![CyclicType { m: 1, a: 0, b: 0 }];
    }
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            if projective_order(m, a, b) == m {
                let t = canonical_type(m, a, b).expect("order checked");
                if (t.a, t.b) == (a, b) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Canonical type of a finite-order monomial transformation, read off its
/// eigenvalues.
pub fn type_of(mat: &ProjMat) -> Result<CyclicType> {
    let mm = MonomialMat::from_projmat(mat)?;
    let (n, e) = mm.eigen_exponents();
    let a = (e[1] + n - e[0]) % n;
    let b = (e[2] + n - e[0]) % n;
    let g = n.gcd(&a).gcd(&b);
    canonical_type(n / g, a / g, b / g)
}

#[cfg(test)]
mod tests;
