use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::polyring::{parse_constant, HomPoly, Monomial3};

/// Invertible 3x3 matrix up to scalars, stored in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMat {
    rows: [[CycNum; 3]; 3],
}

fn det3(m: &[[CycNum; 3]; 3]) -> CycNum {
    let minor = |a: usize, b: usize, c: usize, d: usize| &(&m[1][a] * &m[2][b]) - &(&m[1][c] * &m[2][d]);
    let t0 = &m[0][0] * &minor(1, 2, 2, 1);
    let t1 = &m[0][1] * &minor(0, 2, 2, 0);
    let t2 = &m[0][2] * &minor(0, 1, 1, 0);
    &(&t0 - &t1) + &t2
}

impl ProjMat {
    /// Normalizes `rows`; errors if the determinant vanishes.
    pub fn new(rows: [[CycNum; 3]; 3]) -> Result<ProjMat> {
        if det3(&rows).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(ProjMat::normalized(rows))
    }

    fn normalized(rows: [[CycNum; 3]; 3]) -> ProjMat {
        let lead = rows.iter().flatten().find(|c| !c.is_zero()).expect("nonzero matrix");
        if lead.is_one() {
            return ProjMat { rows };
        }
        let s = lead.inv().expect("nonzero lead");
        ProjMat { rows: rows.map(|r| r.map(|c| if c.is_zero() { c } else { &c * &s })) }
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Result<ProjMat> {
        ProjMat::new(rows.map(|r| r.map(CycNum::from_int)))
    }

    pub fn identity() -> ProjMat {
        ProjMat::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap()
    }

    pub fn diag(c: [CycNum; 3]) -> Result<ProjMat> {
        let [a, b, d] = c;
        let z = CycNum::zero;
        ProjMat::new([[a, z(), z()], [z(), b, z()], [z(), z(), d]])
    }

    /// `diag(E(n)^k0, E(n)^k1, E(n)^k2)`.
    pub fn diag_roots(n: u32, k: [i64; 3]) -> ProjMat {
        ProjMat::diag(k.map(|e| CycNum::root_of_unity(n, e))).expect("roots are nonzero")
    }

    /// Permutation matrix sending variable `r` to variable `images[r]`, so
    /// `[1, 2, 0]` is `[Y; Z; X]`.
    pub fn permutation(images: [usize; 3]) -> ProjMat {
        let mut rows = [[0i64; 3]; 3];
        for (r, &c) in images.iter().enumerate() {
            rows[r][c] = 1;
        }
        ProjMat::from_ints(rows).expect("permutation matrices are invertible")
    }

    pub fn rows(&self) -> &[[CycNum; 3]; 3] {
        &self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> &CycNum {
        &self.rows[r][c]
    }

    pub fn det(&self) -> CycNum {
        det3(&self.rows)
    }

    pub fn mul(&self, o: &ProjMat) -> ProjMat {
        let rows = [0, 1, 2].map(|r| {
            [0, 1, 2].map(|c| {
                let mut acc = CycNum::zero();
                for k in 0..3 {
                    let (a, b) = (&self.rows[r][k], &o.rows[k][c]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
        });
        ProjMat::normalized(rows)
    }

    /// Inverse via the adjugate.
    pub fn inverse(&self) -> ProjMat {
        let m = &self.rows;
        let cof = |r: usize, c: usize| {
            let (r1, r2) = ([1, 0, 0][r], [2, 2, 1][r]);
            let (c1, c2) = ([1, 0, 0][c], [2, 2, 1][c]);
            let v = &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1]);
            if (r + c) % 2 == 1 {
                -v
            } else {
                v
            }
        };
        // adj[r][c] = cofactor(c, r)
        ProjMat::normalized([0, 1, 2].map(|r| [0, 1, 2].map(|c| cof(c, r))))
    }

    pub fn pow(&self, e: u64) -> ProjMat {
        let mut acc = ProjMat::identity();
        let mut base = self.clone();
        let mut e = e;
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

    pub fn is_identity(&self) -> bool {
        *self == ProjMat::identity()
    }

    /// Least common multiple of the entry conductors.
    pub fn conductor(&self) -> u32 {
        self.rows.iter().flatten().fold(1u32, |l, c| {
            let n = c.conductor();
            l / num_integer::gcd(l, n) * n
        })
    }

    /// Hash key of the entries expressed at conductor `n`.
    pub(crate) fn key_at(&self, n: u32) -> Vec<BigInt> {
        let mut out = Vec::new();
        for c in self.rows.iter().flatten() {
            let (num, den) = c.key_at(n).expect("group conductor covers every entry");
            out.extend(num);
            out.push(den);
        }
        out
    }

    /// Whether exactly one entry per row and column is nonzero.
    pub fn is_monomial_shape(&self) -> bool {
        (0..3).all(|r| self.rows[r].iter().filter(|c| !c.is_zero()).count() == 1)
            && (0..3).all(|c| (0..3).filter(|&r| !self.rows[r][c].is_zero()).count() == 1)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..3).all(|r| (0..3).all(|c| r == c || self.rows[r][c].is_zero()))
    }

    /// Coefficients `(b, c, d)` of the characteristic polynomial
    /// `t^3 + b t^2 + c t + d`.
    pub fn char_poly(&self) -> [CycNum; 3] {
        let m = &self.rows;
        let tr = &(&m[0][0] + &m[1][1]) + &m[2][2];
        let pm = |a: usize, b: usize| &(&m[a][a] * &m[b][b]) - &(&m[a][b] * &m[b][a]);
        let c2 = &(&pm(0, 1) + &pm(0, 2)) + &pm(1, 2);
        [-tr, c2, -self.det()]
    }

    /// Whether the matrix has finite order (checked up to `cap`), is not
    /// scalar, and has a repeated eigenvalue. A finite-order matrix is
    /// diagonalizable, so this is exactly conjugacy to `diag(1, 1, E(m)^b)`.
    pub fn is_homology(&self, cap: usize) -> Result<bool> {
        super::element_order(self, cap)?;
        if self.is_identity() {
            return Ok(false);
        }
        let [b, c, d] = self.char_poly();
        let four = CycNum::from_int(4);
        let disc = &(&(&(&(&b * &b) * &(&c * &c)) - &(&four * &c.pow(3)))
            - &(&four * &(&b.pow(3) * &d)))
            - &(&CycNum::from_int(27) * &(&d * &d));
        let disc = &disc + &(&CycNum::from_int(18) * &(&(&b * &c) * &d));
        Ok(disc.is_zero())
    }

    /// Reads `[L0; L1; L2]` (images of `X, Y, Z` as linear forms) or
    /// `diag(c0, c1, c2)`.
    pub fn parse(text: &str) -> Result<ProjMat> {
        let t = text.trim();
        let lead = text.len() - text.trim_start().len();
        let (inner, sep, start) = if let Some(rest) = t.strip_prefix("diag(") {
            let body = rest.strip_suffix(')').ok_or(Error::Syntax {
                pos: lead + t.len(),
                msg: "expected ')' closing diag".into(),
            })?;
            (body, ',', lead + 5)
        } else if let Some(rest) = t.strip_prefix('[') {
            let body = rest.strip_suffix(']').ok_or(Error::Syntax {
                pos: lead + t.len(),
                msg: "expected ']'".into(),
            })?;
            (body, ';', lead + 1)
        } else {
            return Err(Error::Syntax { pos: lead, msg: "expected '[' or 'diag('".into() });
        };
        let mut parts = Vec::new();
        let (mut depth, mut from) = (0i32, 0usize);
        for (i, ch) in inner.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                c if c == sep && depth == 0 => {
                    parts.push((from, &inner[from..i]));
                    from = i + 1;
                }
                _ => {}
            }
        }
        parts.push((from, &inner[from..]));
        if parts.len() != 3 {
            return Err(Error::Syntax {
                pos: start,
                msg: format!("expected 3 entries, found {}", parts.len()),
            });
        }
        let mut rows: [[CycNum; 3]; 3] = Default::default();
        for (r, (off, s)) in parts.into_iter().enumerate() {
            if sep == ',' {
                let c = parse_constant(s).map_err(|e| shift(e, start + off))?;
                rows[r][r] = c;
                continue;
            }
            let f = crate::polyring::parse_linear_at(s, start + off)?;
            if f.degree() > 1 || (f.degree() == 0 && !f.is_zero()) {
                return Err(Error::Syntax {
                    pos: start + off,
                    msg: "matrix rows must be linear forms in X, Y, Z".into(),
                });
            }
            for v in 0..3 {
                if let Some(c) = f.coeff(&Monomial3::pure(v, 1)) {
                    rows[r][v] = c.as_constant().ok_or(Error::NotNumeric)?;
                }
            }
        }
        ProjMat::new(rows)
    }

    /// The three rows as linear forms.
    pub fn row_forms(&self) -> [HomPoly; 3] {
        self.rows.clone().map(|row| {
            HomPoly::from_numeric(1, (0..3).map(|v| (Monomial3::pure(v, 1), row[v].clone())))
                .expect("degree one")
        })
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Syntax { pos, msg } => Error::Syntax { pos: pos + by, msg },
        other => other,
    }
}

impl Default for ProjMat {
    fn default() -> ProjMat {
        ProjMat::identity()
    }
}

impl fmt::Display for ProjMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.row_forms();
        write!(f, "[{a}; {b}; {c}]")
    }
}

impl Serialize for ProjMat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
