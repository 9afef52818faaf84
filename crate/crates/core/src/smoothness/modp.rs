//! Reduction of cyclotomic coefficients modulo a prime `p ≡ 1 (mod N)`.
//!
//! If the Jacobian ideal of the reduction has no projective zero over the
//! algebraic closure of `F_p`, the curve is smooth in characteristic zero:
//! a singular point could be scaled to integral coordinates with a unit
//! entry and would reduce to a singular point mod `p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::groebner::Coeff;
use crate::cyclotomic::CycNum;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Fp {
    v: u64,
    p: u64,
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

impl Coeff for Fp {
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, o: &Fp) -> Fp {
        Fp { v: (self.v + o.v) % self.p, p: self.p }
    }
    fn sub(&self, o: &Fp) -> Fp {
        Fp { v: (self.v + self.p - o.v) % self.p, p: self.p }
    }
    fn mul(&self, o: &Fp) -> Fp {
        Fp { v: ((self.v as u128 * o.v as u128) % self.p as u128) as u64, p: self.p }
    }
    fn neg(&self) -> Fp {
        Fp { v: (self.p - self.v) % self.p, p: self.p }
    }
    fn inv(&self) -> Fp {
        Fp { v: pow_mod(self.v, self.p - 2, self.p), p: self.p }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A prime field with a chosen primitive `N`-th root of unity.
pub(crate) struct Reduction {
    p: u64,
    omega: u64,
}

impl Reduction {
    /// The `skip`-th prime `p ≡ 1 (mod n)` above `2^20` that does not
    /// divide `avoid`, with a primitive `n`-th root of unity.
    pub(crate) fn new(n: u32, avoid: u64, skip: usize) -> Reduction {
        let n = n as u64;
        let mut p = (1u64 << 20) / n * n + 1;
        let mut found = 0;
        loop {
            if is_prime(p) && avoid % p != 0 {
                if found == skip {
                    break;
                }
                found += 1;
            }
            p += n;
        }
        let factors: Vec<u64> = (2..=n).filter(|q| n % q == 0 && is_prime(*q)).collect();
        let omega = (2..p)
            .map(|g| pow_mod(g, (p - 1) / n, p))
            .find(|&w| factors.iter().all(|q| pow_mod(w, n / q, p) != 1))
            .expect("primitive root exists for p ≡ 1 mod n");
        Reduction { p, omega }
    }

    pub(crate) fn elem(&self, v: u64) -> Fp {
        Fp { v: v % self.p, p: self.p }
    }

    /// Image of `x`; `None` if a denominator vanishes mod `p`.
    pub(crate) fn map(&self, x: &CycNum, n: u32) -> Option<Fp> {
        let e = x.embed(n).ok()?;
        let pb = BigInt::from(self.p);
        let mut acc = self.elem(0);
        let w = self.elem(self.omega);
        let mut pw = self.elem(1);
        let coeffs = e.coeffs();
        for c in &coeffs {
            let num = c.numer().mod_floor(&pb).to_u64()?;
            let d = c.denom().mod_floor(&pb).to_u64()?;
            if d == 0 {
                return None;
            }
            let term = self.elem(num).mul(&self.elem(d).inv());
            acc = acc.add(&term.mul(&pw));
            pw = pw.mul(&w);
        }
        Some(acc)
    }
}

impl Reduction {
    pub(crate) fn prime(&self) -> u64 {
        self.p
    }
}
