use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{field_data, reduce_mod};
use super::Rational;
use crate::error::{Error, Result};

/// An element of `Q(E(n))` in the power basis modulo `Phi_n`.
///
/// Stored as integer numerators over one positive common denominator with
/// `gcd(numerators, denominator) = 1`, which is the same reduced residue as a
/// vector of `phi(n)` rationals but keeps multiplication in integers.
#[derive(Clone, Debug)]
pub struct CycNum {
    n: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

fn lcm(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

impl CycNum {
    fn normalized(n: u32, mut num: Vec<BigInt>, mut den: BigInt) -> CycNum {
        if num.iter().all(Zero::is_zero) {
            return CycNum { n, num, den: BigInt::one() };
        }
        if den.is_negative() {
            den = -den;
            for c in &mut num {
                *c = -&*c;
            }
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in &mut num {
                *c /= &g;
            }
            den /= &g;
        }
        CycNum { n, num, den }
    }

    /// The zero of `Q`, conductor 1.
    pub fn zero() -> CycNum {
        CycNum { n: 1, num: vec![BigInt::zero()], den: BigInt::one() }
    }

    /// The one of `Q`, conductor 1.
    pub fn one() -> CycNum {
        CycNum::from_int(1)
    }

    pub fn from_int(v: i64) -> CycNum {
        CycNum { n: 1, num: vec![BigInt::from(v)], den: BigInt::one() }
    }

    pub fn from_bigint(v: BigInt) -> CycNum {
        CycNum { n: 1, num: vec![v], den: BigInt::one() }
    }

    pub fn from_rational(r: &Rational) -> CycNum {
        CycNum::normalized(1, vec![r.numer().clone()], r.denom().clone())
    }

    /// Builds an element from `phi(n)` power-basis coordinates; longer inputs
    /// are reduced modulo `Phi_n`.
    pub fn from_coeffs(n: u32, coeffs: &[Rational]) -> CycNum {
        assert!(n > 0, "conductor must be positive");
        let fd = field_data(n);
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let num: Vec<BigInt> =
            coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        CycNum::normalized(n, reduce_mod(num, &fd.modulus), den)
    }

    /// `E(n)^k` with `k` reduced modulo `n`, conductor `n`.
    ///
    /// # Panics
    ///
    /// Panics if `n == 0`.
    pub fn root_of_unity(n: u32, k: i64) -> CycNum {
        assert!(n > 0, "root_of_unity: n must be positive");
        let fd = field_data(n);
        let k = k.rem_euclid(n as i64) as usize;
        CycNum { n, num: fd.powers[k].clone(), den: BigInt::one() }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// Power-basis coordinates as reduced rationals.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    /// `Some(q)` if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Same element expressed in `Q(E(m))`.
    pub fn embed(&self, m: u32) -> Result<CycNum> {
        if m == 0 || m % self.n != 0 {
            return Err(Error::BadEmbedding { from: self.n, target: m });
        }
        if m == self.n {
            return Ok(self.clone());
        }
        let fd = field_data(m);
        let step = (m / self.n) as usize;
        let mut out = vec![BigInt::zero(); fd.phi];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&fd.powers[i * step]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        Ok(CycNum { n: m, num: out, den: self.den.clone() })
    }

    fn embed_unchecked(&self, m: u32) -> CycNum {
        self.embed(m).expect("target is a multiple of the conductor")
    }

    fn unify(a: &CycNum, b: &CycNum) -> (CycNum, CycNum) {
        let l = lcm(a.n, b.n);
        (a.embed_unchecked(l), b.embed_unchecked(l))
    }

    /// Integer numerators and denominator at conductor `m`; a canonical key
    /// for hashing elements that share the conductor.
    pub fn key_at(&self, m: u32) -> Result<(Vec<BigInt>, BigInt)> {
        let e = self.embed(m)?;
        Ok((e.num, e.den))
    }

    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.den.is_one() {
            if let Some(&(neg, j)) = field_data(self.n).roots.get(&self.num) {
                let r = CycNum::root_of_unity(self.n, -(j as i64));
                return Ok(if neg { -r } else { r });
            }
        }
        let fd = field_data(self.n);
        let a: Vec<Rational> = self.num.iter().map(|c| Rational::from(c.clone())).collect();
        let m: Vec<Rational> = fd.modulus.iter().map(|c| Rational::from(c.clone())).collect();
        let inv = rat_poly_inverse(&a, &m);
        let scaled: Vec<Rational> = inv
            .into_iter()
            .map(|c| c * Rational::from(self.den.clone()))
            .collect();
        Ok(CycNum::from_coeffs(self.n, &scaled))
    }

    pub fn pow(&self, mut e: u64) -> CycNum {
        let mut base = self.clone();
        let mut acc = CycNum::one().embed_unchecked(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn powi(&self, e: i64) -> Result<CycNum> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// `Some((n, k))` with `n` minimal and `gcd(k, n) = 1` (or `(1, 0)`) when
    /// the element equals `E(n)^k`.
    pub fn as_root_of_unity(&self) -> Option<(u32, u32)> {
        if !self.den.is_one() {
            return None;
        }
        let fd = field_data(self.n);
        let &(neg, j) = fd.roots.get(&self.num)?;
        let l = fd.root_order;
        let mut e = j * (l / self.n);
        if neg {
            e = (e + l / 2) % l;
        }
        if e == 0 {
            return Some((1, 0));
        }
        let g = e.gcd(&l);
        Some((l / g, e / g))
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, r: &Rational) -> CycNum {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        CycNum::normalized(self.n, num, &self.den * r.denom())
    }

    /// Greatest common divisor of the integer numerators over the
    /// denominator; `content(x) * primitive(x) = x` up to sign choice.
    pub fn rational_content(&self) -> Rational {
        let mut g = BigInt::zero();
        for c in &self.num {
            g = g.gcd(c);
        }
        Rational::new(g, self.den.clone())
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn rat_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![Rational::zero()], r);
    }
    let lead = b[db].clone();
    let mut q = vec![Rational::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = &r[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    r.truncate(db.max(1));
    trim(&mut r);
    (q, r)
}

fn rat_mul_sub(s0: &[Rational], q: &[Rational], s1: &[Rational]) -> Vec<Rational> {
    let mut prod = vec![Rational::zero(); q.len() + s1.len() - 1];
    for (i, x) in q.iter().enumerate() {
        for (j, y) in s1.iter().enumerate() {
            prod[i + j] += x * y;
        }
    }
    let n = prod.len().max(s0.len());
    let mut out = vec![Rational::zero(); n];
    for (i, c) in s0.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in prod.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo the irreducible `m` by the extended Euclidean
/// algorithm over `Q[x]`.
fn rat_poly_inverse(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut s0 = vec![Rational::zero()];
    let mut s1 = vec![Rational::one()];
    while !(r1.len() == 1) {
        let (q, r) = rat_divmod(&r0, &r1);
        let s = rat_mul_sub(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    let c = r1[0].clone();
    debug_assert!(!c.is_zero(), "element not invertible modulo an irreducible");
    s1.iter().map(|x| x / &c).collect()
}

impl PartialEq for CycNum {
    fn eq(&self, other: &CycNum) -> bool {
        if self.n == other.n {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = CycNum::unify(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CycNum {}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        if self.n != rhs.n {
            let (a, b) = CycNum::unify(self, rhs);
            return &a + &b;
        }
        if self.den == rhs.den {
            let num = self.num.iter().zip(&rhs.num).map(|(x, y)| x + y).collect();
            return CycNum::normalized(self.n, num, self.den.clone());
        }
        let num = self
            .num
            .iter()
            .zip(&rhs.num)
            .map(|(x, y)| x * &rhs.den + y * &self.den)
            .collect();
        CycNum::normalized(self.n, num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        if self.n != rhs.n {
            // Scalars from Q need no embedding.
            if rhs.n == 1 {
                return self.scale(&rhs.to_rational().unwrap());
            }
            if self.n == 1 {
                return rhs.scale(&self.to_rational().unwrap());
            }
            let (a, b) = CycNum::unify(self, rhs);
            return &a * &b;
        }
        if self.n <= 2 {
            return CycNum::normalized(
                self.n,
                vec![&self.num[0] * &rhs.num[0]],
                &self.den * &rhs.den,
            );
        }
        let fd = field_data(self.n);
        let mut prod = vec![BigInt::zero(); 2 * fd.phi - 1];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        CycNum::normalized(self.n, reduce_mod(prod, &fd.modulus), &self.den * &rhs.den)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { n: self.n, num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $f(self, rhs: CycNum) -> CycNum {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $f(self, rhs: &CycNum) -> CycNum {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for CycNum {
    fn from(v: i64) -> CycNum {
        CycNum::from_int(v)
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_root(n: u32, k: u32) -> String {
    match k {
        0 => "1".to_string(),
        1 => format!("E({n})"),
        _ => format!("E({n})^{k}"),
    }
}

impl CycNum {
    /// Number of power-basis terms `Display` emits; callers parenthesize
    /// when it exceeds one.
    pub fn display_terms(&self) -> usize {
        if self.to_rational().is_some() || self.as_root_of_unity().is_some() || (-self).as_root_of_unity().is_some() {
            1
        } else {
            self.num.iter().filter(|c| !c.is_zero()).count()
        }
    }
}

/// Rationals print as `p/q`, signed roots of unity as `E(n)^k` at minimal
/// `n`, anything else as a sum over the power basis of its own conductor.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{}", fmt_rational(&r));
        }
        if let Some((n, k)) = self.as_root_of_unity() {
            return write!(f, "{}", fmt_root(n, k));
        }
        if let Some((n, k)) = (-self).as_root_of_unity() {
            return write!(f, "-{}", fmt_root(n, k));
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", fmt_root(self.n, i as u32))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&a), fmt_root(self.n, i as u32))?;
            }
        }
        Ok(())
    }
}

impl Default for CycNum {
    fn default() -> CycNum {
        CycNum::zero()
    }
}
