use std::collections::HashMap;

use super::ParamPoly;
use crate::error::{Error, Result};

fn trimmed(p: &[ParamPoly]) -> &[ParamPoly] {
    let mut n = p.len();
    while n > 0 && p[n - 1].is_zero() {
        n -= 1;
    }
    &p[..n]
}

/// Determinant by Laplace expansion along rows, memoized on the set of
/// columns still available. Division-free, so it works over `ParamPoly`.
fn determinant(m: &[Vec<ParamPoly>]) -> ParamPoly {
    fn go(
        m: &[Vec<ParamPoly>],
        row: usize,
        cols: u64,
        memo: &mut HashMap<u64, ParamPoly>,
    ) -> ParamPoly {
        if row == m.len() {
            return ParamPoly::constant(crate::CycNum::one());
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = ParamPoly::zero();
        let mut sign_neg = false;
        for c in 0..m.len() {
            if cols & (1 << c) == 0 {
                continue;
            }
            if !m[row][c].is_zero() {
                let minor = go(m, row + 1, cols & !(1 << c), memo);
                let t = &m[row][c] * &minor;
                acc = if sign_neg { &acc - &t } else { &acc + &t };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    assert!(m.len() < 64, "matrix too large for bitmask expansion");
    go(m, 0, (1u64 << m.len()) - 1, &mut HashMap::new())
}

/// Resultant of two univariate polynomials given by ascending coefficient
/// lists, defined as the determinant of the Sylvester matrix whose first
/// `deg q` rows hold the coefficients of `p` from the top degree down.
pub fn resultant_coeffs(p: &[ParamPoly], q: &[ParamPoly]) -> Result<ParamPoly> {
    let p = trimmed(p);
    let q = trimmed(q);
    if p.is_empty() || q.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let (dp, dq) = (p.len() - 1, q.len() - 1);
    let size = dp + dq;
    if size == 0 {
        return Ok(ParamPoly::constant(crate::CycNum::one()));
    }
    let mut m = vec![vec![ParamPoly::zero(); size]; size];
    for r in 0..dq {
        for (i, c) in p.iter().rev().enumerate() {
            m[r][r + i] = c.clone();
        }
    }
    for r in 0..dp {
        for (i, c) in q.iter().rev().enumerate() {
            m[dq + r][r + i] = c.clone();
        }
    }
    Ok(determinant(&m))
}

/// Resultant of `p` and `q` with respect to the parameter `var`.
pub fn resultant(p: &ParamPoly, q: &ParamPoly, var: &str) -> Result<ParamPoly> {
    resultant_coeffs(&p.coefficients_in(var), &q.coefficients_in(var))
}
