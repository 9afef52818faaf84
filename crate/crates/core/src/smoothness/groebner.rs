//! Homogeneous Buchberger completion under grevlex with `X > Y > Z`,
//! generic over the coefficient field.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::polyring::Monomial3;

/// Coefficient field operations needed by the completion.
pub(crate) trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Self;
}

/// Grevlex comparison with `X > Y > Z`.
pub(crate) fn grevlex(a: &Monomial3, b: &Monomial3) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.0[2].cmp(&a.0[2]))
        .then_with(|| b.0[1].cmp(&a.0[1]))
}

/// Terms sorted by decreasing grevlex order, no zero coefficients.
pub(crate) type Poly<C> = Vec<(Monomial3, C)>;

pub(crate) fn sort_poly<C: Coeff>(mut p: Poly<C>) -> Poly<C> {
    p.retain(|(_, c)| !c.is_zero());
    p.sort_by(|a, b| grevlex(&b.0, &a.0));
    p
}

fn make_monic<C: Coeff>(p: &mut Poly<C>) {
    let inv = p[0].1.inv();
    for t in p.iter_mut() {
        t.1 = t.1.mul(&inv);
    }
}

/// `f - c·m·g`, merging two sorted term lists.
fn sub_shifted<C: Coeff>(f: &Poly<C>, c: &C, m: &Monomial3, g: &Poly<C>) -> Poly<C> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < f.len() || j < g.len() {
        let gm = g.get(j).map(|(gm, _)| gm.mul(m));
        let ord = match (f.get(i), gm.as_ref()) {
            (Some((fm, _)), Some(gm)) => grevlex(fm, gm),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => unreachable!(),
        };
        match ord {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm.unwrap(), g[j].1.mul(c).neg()));
                j += 1;
            }
            Ordering::Equal => {
                let v = f[i].1.sub(&g[j].1.mul(c));
                if !v.is_zero() {
                    out.push((f[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Full reduction of `f` modulo the monic `basis`.
pub(crate) fn reduce<C: Coeff>(f: &Poly<C>, basis: &[Poly<C>]) -> Poly<C> {
    let mut f = f.clone();
    let mut rest: Poly<C> = Vec::new();
    while let Some((lm, lc)) = f.first().cloned() {
        match basis.iter().find(|g| g[0].0.divides(&lm)) {
            Some(g) => {
                let m = g[0].0.quotient_of(&lm);
                f = sub_shifted(&f, &lc, &m, g);
            }
            None => {
                rest.push((lm, lc));
                f.remove(0);
            }
        }
    }
    rest
}

fn s_poly<C: Coeff>(f: &Poly<C>, g: &Poly<C>) -> Poly<C> {
    let l = f[0].0.lcm(&g[0].0);
    let mf = f[0].0.quotient_of(&l);
    let mg = g[0].0.quotient_of(&l);
    let fs: Poly<C> = f.iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    sub_shifted(&fs, &g[0].1, &mg, g)
}

fn coprime(a: &Monomial3, b: &Monomial3) -> bool {
    (0..3).all(|v| a.0[v] == 0 || b.0[v] == 0)
}

/// Reduced Groebner basis of the homogeneous generators, monic.
pub(crate) fn buchberger<C: Coeff>(gens: Vec<Poly<C>>) -> Vec<Poly<C>> {
    let mut basis: Vec<Poly<C>> = Vec::new();
    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let add = |mut h: Poly<C>, basis: &mut Vec<Poly<C>>, pending: &mut BTreeSet<(u32, usize, usize)>| {
        make_monic(&mut h);
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            pending.insert((g[0].0.lcm(&h[0].0).degree(), i, k));
        }
        basis.push(h);
    };
    // Generators enter by degree so the completion stays degree-ordered.
    let mut gens: Vec<Poly<C>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    gens.sort_by_key(|g| g[0].0.degree());
    for g in gens {
        let r = reduce(&g, &basis);
        if !r.is_empty() {
            add(r, &mut basis, &mut pending);
        }
    }
    while let Some(&(deg, i, j)) = pending.iter().next() {
        pending.remove(&(deg, i, j));
        let (li, lj) = (basis[i][0].0, basis[j][0].0);
        if coprime(&li, &lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let key = |a: usize, b: usize| {
            let (a, b) = (a.min(b), a.max(b));
            (basis[a][0].0.lcm(&basis[b][0].0).degree(), a, b)
        };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let r = reduce(&s_poly(&basis[i], &basis[j]), &basis);
        if !r.is_empty() {
            add(r, &mut basis, &mut pending);
        }
    }
    interreduce(basis)
}

fn interreduce<C: Coeff>(basis: Vec<Poly<C>>) -> Vec<Poly<C>> {
    let mut keep: Vec<Poly<C>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = g[0].0;
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i && h[0].0.divides(&lm) && (h[0].0 != lm || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Poly<C>> =
            keep.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        let lead = vec![keep[i][0].clone()];
        let tail: Poly<C> = keep[i][1..].to_vec();
        let mut r = lead;
        r.extend(reduce(&tail, &others));
        make_monic(&mut r);
        out.push(r);
    }
    out.sort_by(|a, b| grevlex(&a[0].0, &b[0].0));
    out
}

/// Whether every S-polynomial reduces to zero.
pub(crate) fn is_groebner<C: Coeff>(basis: &[Poly<C>]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !reduce(&s_poly(&basis[i], &basis[j]), basis).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Leading terms contain a pure power of each variable (or a constant).
pub(crate) fn pure_powers_present<C>(basis: &[Poly<C>]) -> bool {
    (0..3).all(|v| {
        basis.iter().any(|g| {
            let e = g[0].0 .0;
            (0..3).all(|w| w == v || e[w] == 0)
        })
    })
}
