use num_integer::Integer;

use super::ProjMat;
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};

/// Permutation times diagonal: row `r` holds `E(conductor)^exps[r]` in
/// column `perm[r]`, i.e. the variable `r` is sent to a multiple of
/// variable `perm[r]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialMat {
    pub perm: [usize; 3],
    pub exps: [u32; 3],
    pub conductor: u32,
}

fn lcm(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

impl MonomialMat {
    pub fn new(perm: [usize; 3], exps: [i64; 3], conductor: u32) -> MonomialMat {
        let n = conductor as i64;
        MonomialMat { perm, exps: exps.map(|e| e.rem_euclid(n) as u32), conductor }
    }

    pub fn to_projmat(&self) -> ProjMat {
        let mut rows: [[CycNum; 3]; 3] = Default::default();
        for r in 0..3 {
            rows[r][self.perm[r]] = CycNum::root_of_unity(self.conductor, self.exps[r] as i64);
        }
        ProjMat::new(rows).expect("monomial matrices are invertible")
    }

    /// Reads back a monomial [`ProjMat`] whose nonzero entries are roots of
    /// unity, at the least conductor containing them.
    pub fn from_projmat(m: &ProjMat) -> Result<MonomialMat> {
        if !m.is_monomial_shape() {
            return Err(Error::NotMonomial);
        }
        let mut perm = [0; 3];
        let mut roots = [(1u32, 0u32); 3];
        for r in 0..3 {
            let c = (0..3).find(|&c| !m.entry(r, c).is_zero()).unwrap();
            perm[r] = c;
            roots[r] = m.entry(r, c).as_root_of_unity().ok_or(Error::NotMonomial)?;
        }
        let n = roots.iter().fold(1, |l, &(o, _)| lcm(l, o));
        let exps = roots.map(|(o, k)| k * (n / o));
        Ok(MonomialMat { perm, exps, conductor: n })
    }

    /// Cycles of the permutation, each listed from its smallest index.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; 3];
        let mut out = Vec::new();
        for s in 0..3 {
            if seen[s] {
                continue;
            }
            let mut cyc = vec![s];
            seen[s] = true;
            let mut r = self.perm[s];
            while r != s {
                cyc.push(r);
                seen[r] = true;
                r = self.perm[r];
            }
            out.push(cyc);
        }
        out
    }

    /// Eigenvalues as `E(n)^e_i` for one common `n`, listed cycle by cycle.
    /// A cycle of length `l` whose scalars multiply to `E(N)^s` contributes
    /// the `l` roots of `t^l = E(N)^s`.
    pub fn eigen_exponents(&self) -> (u32, Vec<u32>) {
        let cycles = self.cycles();
        let n = cycles.iter().fold(1, |l, c| lcm(l, self.conductor * c.len() as u32));
        let mut out = Vec::new();
        for cyc in &cycles {
            let len = cyc.len() as u32;
            let s: u32 = cyc.iter().map(|&r| self.exps[r]).sum::<u32>() % self.conductor;
            let scale = n / (len * self.conductor);
            for j in 0..len {
                out.push(((s + j * self.conductor) * scale) % n);
            }
        }
        (n, out)
    }
}

/// `(P, D)` with `D = P^-1 M P` diagonal, built cycle by cycle: for a cycle
/// of length `l` and each eigenvalue `s` of that cycle, the eigenvector has
/// `v[r0] = 1` and `v[perm(r)] = s·v[r] / c_r`. The identity permutation gives
/// `P = I`.
pub fn diagonalize_monomial(m: &MonomialMat) -> (ProjMat, ProjMat) {
    let (n, eig) = m.eigen_exponents();
    let mut cols: Vec<[CycNum; 3]> = Vec::new();
    let mut k = 0;
    for cyc in m.cycles() {
        for _ in 0..cyc.len() {
            let s = CycNum::root_of_unity(n, eig[k] as i64);
            k += 1;
            let mut v: [CycNum; 3] = Default::default();
            v[cyc[0]] = CycNum::one();
            let mut r = cyc[0];
            for _ in 1..cyc.len() {
                let c = CycNum::root_of_unity(m.conductor, m.exps[r] as i64);
                let next = &(&s * &v[r]) * &c.inv().expect("roots are nonzero");
                r = m.perm[r];
                v[r] = next;
            }
            cols.push(v);
        }
    }
    let rows = [0, 1, 2].map(|r| [0, 1, 2].map(|c| cols[c][r].clone()));
    let p = ProjMat::new(rows).expect("eigenvectors of distinct cycles are independent");
    let d = ProjMat::diag_roots(n, [eig[0] as i64, eig[1] as i64, eig[2] as i64]);
    (p, d)
}
