use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;

use super::ProjMat;
use crate::error::{Error, Result};

/// Closure size limit used when none is given.
pub const DEFAULT_CAP: usize = 2000;

/// Least `n ≥ 1` with `M^n` projectively trivial.
pub fn element_order(m: &ProjMat, cap: usize) -> Result<usize> {
    let mut p = m.clone();
    for n in 1..=cap {
        if p.is_identity() {
            return Ok(n);
        }
        p = p.mul(m);
    }
    Err(Error::OrderExceedsCap(cap))
}

/// A finite subgroup of `PGL_3` enumerated from named generators.
///
/// Element 0 is the identity. Elements are indexed in breadth-first order
/// of the Cayley graph for right multiplication by generators, and the
/// Cayley table is filled lazily by following generator words.
#[derive(Debug)]
pub struct FinGroup {
    conductor: u32,
    elements: Vec<ProjMat>,
    index: HashMap<Vec<BigInt>, usize>,
    gen_names: Vec<String>,
    gens: Vec<ProjMat>,
    /// `right[e][g]` is the index of `elements[e] * gens[g]`.
    right: Vec<Vec<usize>>,
    /// Generator word reaching each element from the identity.
    words: Vec<Vec<usize>>,
    table: OnceLock<Vec<Vec<u32>>>,
}

impl Clone for FinGroup {
    fn clone(&self) -> FinGroup {
        FinGroup {
            conductor: self.conductor,
            elements: self.elements.clone(),
            index: self.index.clone(),
            gen_names: self.gen_names.clone(),
            gens: self.gens.clone(),
            right: self.right.clone(),
            words: self.words.clone(),
            table: OnceLock::new(),
        }
    }
}

/// Closure with generators named `g1, g2, ...`.
pub fn closure(gens: &[ProjMat], cap: usize) -> Result<FinGroup> {
    let named: Vec<(String, ProjMat)> =
        gens.iter().enumerate().map(|(i, g)| (format!("g{}", i + 1), g.clone())).collect();
    closure_named(&named, cap)
}

/// Breadth-first product closure; errors once more than `cap` elements
/// appear.
pub fn closure_named(gens: &[(String, ProjMat)], cap: usize) -> Result<FinGroup> {
    let conductor = gens.iter().fold(1u32, |l, (_, g)| l.lcm(&g.conductor()));
    let id = ProjMat::identity();
    let mut g = FinGroup {
        conductor,
        elements: vec![id.clone()],
        index: HashMap::from([(id.key_at(conductor), 0)]),
        gen_names: gens.iter().map(|(n, _)| n.clone()).collect(),
        gens: gens.iter().map(|(_, m)| m.clone()).collect(),
        right: Vec::new(),
        words: vec![Vec::new()],
        table: OnceLock::new(),
    };
    let mut queue = VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        let mut row = Vec::with_capacity(g.gens.len());
        for gi in 0..g.gens.len() {
            let p = g.elements[e].mul(&g.gens[gi]);
            let key = p.key_at(conductor);
            let idx = match g.index.get(&key) {
                Some(&i) => i,
                None => {
                    let i = g.elements.len();
                    if i >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    g.elements.push(p);
                    g.index.insert(key, i);
                    let mut w = g.words[e].clone();
                    w.push(gi);
                    g.words.push(w);
                    queue.push_back(i);
                    i
                }
            };
            row.push(idx);
        }
        g.right.push(row);
    }
    Ok(g)
}

impl FinGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[ProjMat] {
        &self.elements
    }

    pub fn generators(&self) -> &[ProjMat] {
        &self.gens
    }

    pub fn generator_names(&self) -> &[String] {
        &self.gen_names
    }

    /// Common conductor used for element keys.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Index of `m` if it belongs to the group.
    pub fn index_of(&self, m: &ProjMat) -> Option<usize> {
        if self.conductor % m.conductor() != 0 {
            // Conductors are not minimized, so fall back to exact comparison.
            return self.elements.iter().position(|e| e == m);
        }
        self.index.get(&m.key_at(self.conductor)).copied()
    }

    pub fn contains(&self, m: &ProjMat) -> bool {
        self.index_of(m).is_some()
    }

    fn cayley(&self) -> &Vec<Vec<u32>> {
        self.table.get_or_init(|| {
            let n = self.order();
            let mut t = vec![vec![0u32; n]; n];
            for (j, w) in self.words.iter().enumerate() {
                for (i, row) in t.iter_mut().enumerate() {
                    let mut x = i;
                    for &g in w {
                        x = self.right[x][g];
                    }
                    row[j] = x as u32;
                }
            }
            t
        })
    }

    /// Index of `elements[i] * elements[j]`.
    pub fn mul_idx(&self, i: usize, j: usize) -> usize {
        self.cayley()[i][j] as usize
    }

    pub fn inv_idx(&self, i: usize) -> usize {
        let t = self.cayley();
        (0..self.order()).find(|&j| t[i][j] == 0).expect("groups have inverses")
    }

    /// Index of the `k`-th generator.
    pub fn generator_idx(&self, k: usize) -> usize {
        self.right[0][k]
    }

    pub fn element_order_idx(&self, i: usize) -> usize {
        let mut x = i;
        let mut n = 1;
        while x != 0 {
            x = self.mul_idx(x, i);
            n += 1;
        }
        n
    }

    /// Orders of all elements, indexed like [`FinGroup::elements`].
    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order()).map(|i| self.element_order_idx(i)).collect()
    }

    /// Closure of the conjugated generators `P^-1 g P`.
    pub fn conjugate(&self, p: &ProjMat, cap: usize) -> Result<FinGroup> {
        let pinv = p.inverse();
        let gens: Vec<(String, ProjMat)> = self
            .gen_names
            .iter()
            .zip(&self.gens)
            .map(|(n, g)| (n.clone(), pinv.mul(g).mul(p)))
            .collect();
        closure_named(&gens, cap)
    }
}
