//! Monomial transformations preserving a numeric form up to a scalar.
//!
//! For a permutation `pi` and diagonal exponents `k` (with `k0 = 0` by
//! normalization) the monomial `e` is sent to `E(N)^(k·e)` times the monomial
//! `pi(e)`. Invariance means `pi` maps the support onto itself and, for a base
//! monomial `e0`, `(e - e0)·k ≡ s_e (mod N)` where `E(N)^s_e` is the ratio
//! `f[pi(e)] f[e0] / (f[e] f[pi(e0)])`. Each permutation's system is solved by
//! diagonalizing its integer matrix with unimodular row and column moves.

use std::collections::BTreeMap;

use num_integer::Integer;

use super::{closure_named, FinGroup, MonomialMat, ProjMat};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::polyring::{HomPoly, Monomial3};

const PERMS: [[usize; 3]; 6] =
    [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn image(e: &Monomial3, perm: &[usize; 3]) -> Monomial3 {
    let mut out = [0; 3];
    for r in 0..3 {
        out[perm[r]] = e.0[r];
    }
    Monomial3(out)
}

/// All `(k1, k2)` modulo `n` with `a[i]·(k1, k2) ≡ s[i] (mod n)`, or
/// `None` if there are more than `limit`.
fn solve_congruences(a: &[[i64; 2]], s: &[i64], n: i64, limit: usize) -> Option<Vec<[i64; 2]>> {
    let mut a: Vec<[i64; 2]> = a.to_vec();
    let mut s: Vec<i64> = s.iter().map(|v| v.rem_euclid(n)).collect();
    let mut q = [[1i64, 0], [0, 1]];
    let rows = a.len();
    let mut diag = [0i64; 2];
    for t in 0..2 {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..2 {
                    if a[i][j] != 0
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            a.swap(t, bi);
            s.swap(t, bi);
            if bj != t {
                for row in a.iter_mut() {
                    row.swap(t, bj);
                }
                for row in q.iter_mut() {
                    row.swap(t, bj);
                }
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let f = a[i][t] / p;
                if f != 0 {
                    for j in 0..2 {
                        a[i][j] -= f * a[t][j];
                    }
                    s[i] = (s[i] - f * s[t]).rem_euclid(n);
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..2 {
                let f = a[t][j] / p;
                if f != 0 {
                    for row in a.iter_mut() {
                        row[j] -= f * row[t];
                    }
                    for row in q.iter_mut() {
                        row[j] -= f * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if clean {
                diag[t] = p;
                break;
            }
        }
    }
    let rank = diag.iter().filter(|&&d| d != 0).count();
    if (rank..rows).any(|i| s[i] != 0) {
        return Some(Vec::new());
    }
    // Per coordinate of the transformed unknowns: solutions of d·y ≡ u (mod n).
    let mut choices: Vec<Vec<i64>> = Vec::new();
    for t in 0..2 {
        let d = diag[t].rem_euclid(n);
        let u = if t < rows { s[t] } else { 0 };
        let g = d.gcd(&n);
        if u % g != 0 {
            return Some(Vec::new());
        }
        let m = n / g;
        let base = if m == 1 {
            0
        } else {
            let inv = mod_inverse((d / g).rem_euclid(m), m);
            (inv * (u / g)).rem_euclid(m)
        };
        choices.push((0..g).map(|j| base + j * m).collect());
    }
    if choices[0].len() * choices[1].len() > limit {
        return None;
    }
    let mut out = Vec::new();
    for &y0 in &choices[0] {
        for &y1 in &choices[1] {
            let k1 = (q[0][0] * y0 + q[0][1] * y1).rem_euclid(n);
            let k2 = (q[1][0] * y0 + q[1][1] * y1).rem_euclid(n);
            out.push([k1, k2]);
        }
    }
    Some(out)
}

fn mod_inverse(a: i64, m: i64) -> i64 {
    let e = a.extended_gcd(&m);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m)
}

/// Exponents `k` (with `k0 = 0`) for which the monomial matrix of `perm`
/// preserves `F`, at conductor `n`.
fn solutions_for_perm(
    terms: &BTreeMap<Monomial3, CycNum>,
    perm: &[usize; 3],
    n: u32,
    limit: usize,
) -> Result<Vec<[i64; 3]>> {
    for e in terms.keys() {
        if !terms.contains_key(&image(e, perm)) {
            return Ok(Vec::new());
        }
    }
    let (e0, f0) = terms.iter().next().expect("nonzero form");
    let fi0 = &terms[&image(e0, perm)];
    let base = f0 * &fi0.inv().expect("support coefficient");
    let mut a = Vec::new();
    let mut s = Vec::new();
    for (e, f) in terms {
        let rho = &(&terms[&image(e, perm)] * &base) * &f.inv().expect("support coefficient");
        let Some((ord, k)) = rho.as_root_of_unity() else {
            return Ok(Vec::new());
        };
        if n % ord != 0 {
            return Ok(Vec::new());
        }
        // Exponent of the variable sent along row r is e[r]; k0 = 0.
        a.push([e.0[1] as i64 - e0.0[1] as i64, e.0[2] as i64 - e0.0[2] as i64]);
        s.push((k * (n / ord)) as i64);
    }
    let sols = solve_congruences(&a, &s, n as i64, limit).ok_or(Error::CapExceeded(limit))?;
    Ok(sols.into_iter().map(|[k1, k2]| [0, k1, k2]).collect())
}

/// Group of monomial transformations with `N`-th root of unity scalars that
/// preserve `F` up to a scalar.
pub fn monomial_stabilizer(f: &HomPoly, n: u32, cap: usize) -> Result<FinGroup> {
    let terms: BTreeMap<Monomial3, CycNum> =
        f.numeric_terms().ok_or(Error::NotNumeric)?.into_iter().collect();
    if terms.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let mut candidates: Vec<ProjMat> = Vec::new();
    for perm in &PERMS {
        let remaining = cap.saturating_sub(candidates.len());
        for k in solutions_for_perm(&terms, perm, n, remaining)? {
            let mm = MonomialMat::new(*perm, k, n);
            candidates.push(reduce_conductor(&mm).to_projmat());
        }
        if candidates.len() > cap {
            return Err(Error::CapExceeded(cap));
        }
    }
    // Greedy generating set: add any element not yet reached and re-close.
    let mut gens: Vec<(String, ProjMat)> = Vec::new();
    let mut group = closure_named(&gens, cap)?;
    let mut by_order: Vec<(usize, &ProjMat)> = candidates
        .iter()
        .map(|c| (super::element_order(c, cap).unwrap_or(0), c))
        .collect();
    by_order.sort_by(|a, b| b.0.cmp(&a.0));
    for (_, c) in by_order {
        if !group.contains(c) {
            gens.push((format!("g{}", gens.len() + 1), c.clone()));
            group = closure_named(&gens, cap)?;
        }
    }
    debug_assert_eq!(group.order(), candidates.len(), "stabilizer candidates form a group");
    Ok(group)
}

/// Same matrix at the least conductor holding its entries.
fn reduce_conductor(m: &MonomialMat) -> MonomialMat {
    let g = m.exps.iter().fold(m.conductor, |g, &e| g.gcd(&e));
    MonomialMat { perm: m.perm, exps: m.exps.map(|e| e / g), conductor: m.conductor / g }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(a: &[[i64; 2]], s: &[i64], n: i64) -> Vec<[i64; 2]> {
        let mut out = Vec::new();
        for k1 in 0..n {
            for k2 in 0..n {
                if a.iter().zip(s).all(|(r, &v)| (r[0] * k1 + r[1] * k2 - v).rem_euclid(n) == 0) {
                    out.push([k1, k2]);
                }
            }
        }
        out
    }

    #[test]
    fn congruences_match_brute_force() {
        let cases: Vec<(Vec<[i64; 2]>, Vec<i64>, i64)> = vec![
            (vec![[4, 0], [0, 4], [-1, 4]], vec![0, 0, 0], 20),
            (vec![[2, 3], [4, 6]], vec![1, 2], 12),
            (vec![[2, 3], [4, 6]], vec![1, 3], 12),
            (vec![[0, 0]], vec![0], 7),
            (vec![[0, 0]], vec![3], 7),
            (vec![[5, -5], [1, 4]], vec![0, 0], 15),
            (vec![[3, 9], [6, 0], [-2, 1]], vec![4, 2, 7], 13),
            (vec![[-5, 0], [-4, 1], [-1, 4]], vec![0, 0, 0], 16),
        ];
        for (a, s, n) in cases {
            let mut got = solve_congruences(&a, &s, n, 10_000).unwrap();
            got.sort();
            assert_eq!(got, brute(&a, &s, n), "a={a:?} s={s:?} n={n}");
        }
    }
}
