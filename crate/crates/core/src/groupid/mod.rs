//! Fingerprints, isomorphism tests and identification of small matrix
//! groups against reference groups built from explicit generators.

mod label;
mod words;

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

pub use label::GroupLabel;
pub use words::{evaluate_word, verify_presentation};

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::projlinear::{closure_named, FinGroup, ProjMat, DEFAULT_CAP};

/// Isomorphism invariants of a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    /// Element order to number of elements of that order.
    pub element_orders: BTreeMap<usize, usize>,
    pub abelian: bool,
    pub center_order: usize,
    pub derived_order: usize,
}

/// Subgroup generated by the given element indices.
pub(crate) fn subgroup(g: &FinGroup, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut out = vec![0];
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul_idx(x, s);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out
}

fn commutes(g: &FinGroup, a: usize, b: usize) -> bool {
    g.mul_idx(a, b) == g.mul_idx(b, a)
}

/// Order, element-order multiset, center and derived subgroup.
pub fn fingerprint(g: &FinGroup) -> GroupFingerprint {
    let n = g.order();
    let mut element_orders = BTreeMap::new();
    for o in g.element_orders() {
        *element_orders.entry(o).or_insert(0) += 1;
    }
    let gens: Vec<usize> = (0..g.generators().len()).map(|k| g.generator_idx(k)).collect();
    let center_order = (0..n).filter(|&x| gens.iter().all(|&s| commutes(g, x, s))).count();
    let mut comms: Vec<usize> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let c = g.mul_idx(g.mul_idx(g.inv_idx(a), g.inv_idx(b)), g.mul_idx(a, b));
            comms.push(c);
        }
    }
    comms.sort_unstable();
    comms.dedup();
    let derived_order = subgroup(g, &comms).len();
    GroupFingerprint {
        order: n,
        element_orders,
        abelian: center_order == n,
        center_order,
        derived_order,
    }
}

/// Greedy generating sequence, trying elements of larger order first.
fn generating_sequence(g: &FinGroup) -> Vec<usize> {
    let orders = g.element_orders();
    let mut idx: Vec<usize> = (0..g.order()).collect();
    idx.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
    let mut gens = Vec::new();
    let mut span = vec![0usize];
    for x in idx {
        if span.len() == g.order() {
            break;
        }
        if !span.contains(&x) {
            gens.push(x);
            span = subgroup(g, &gens);
        }
    }
    gens
}

/// Extends `gens -> images` along the Cayley graph of `gens`; `true` iff it
/// is a well-defined injective homomorphism.
fn extends_to_embedding(g: &FinGroup, gens: &[usize], h: &FinGroup, images: &[usize]) -> bool {
    let mut phi = vec![usize::MAX; g.order()];
    phi[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (s, &t) in gens.iter().zip(images) {
            let y = g.mul_idx(x, *s);
            let img = h.mul_idx(phi[x], t);
            if phi[y] == usize::MAX {
                phi[y] = img;
                queue.push_back(y);
            } else if phi[y] != img {
                return false;
            }
        }
    }
    let mut hit = vec![false; h.order()];
    phi.iter().all(|&v| v != usize::MAX && !std::mem::replace(&mut hit[v], true))
}

/// Exact isomorphism test by backtracking over order-compatible images of a
/// minimal generating sequence.
pub fn isomorphic(g: &FinGroup, h: &FinGroup) -> bool {
    if g.order() != h.order() || fingerprint(g) != fingerprint(h) {
        return false;
    }
    let gens = generating_sequence(g);
    let g_orders = g.element_orders();
    let h_orders = h.element_orders();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| (0..h.order()).filter(|&t| h_orders[t] == g_orders[s]).collect())
        .collect();
    fn search(
        g: &FinGroup,
        gens: &[usize],
        h: &FinGroup,
        cands: &[Vec<usize>],
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == gens.len() {
            return extends_to_embedding(g, gens, h, chosen);
        }
        for &t in &cands[chosen.len()] {
            chosen.push(t);
            if search(g, gens, h, cands, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    search(g, &gens, h, &candidates, &mut Vec::new())
}

fn cyc(n: u32, k: i64) -> CycNum {
    CycNum::root_of_unity(n, k)
}

/// Reference generators for a label.
pub fn reference_generators(label: &GroupLabel) -> Result<Vec<(String, ProjMat)>> {
    let perm = ProjMat::permutation;
    let d = |n: u32, k: [i64; 3]| ProjMat::diag_roots(n, k);
    let one = |name: &str, m: ProjMat| vec![(name.to_string(), m)];
    Ok(match *label {
        GroupLabel::Cyclic(n) if n >= 1 => one(
            "sigma",
            match n {
                20 => d(20, [0, 4, 5]),
                16 => d(16, [0, 1, 12]),
                10 => d(10, [0, 2, 5]),
                8 => d(8, [0, 1, 4]),
                5 => d(5, [0, 0, 1]),
                4 => d(4, [0, 1, 2]),
                3 => d(3, [0, 1, 2]),
                2 => d(2, [0, 0, 1]),
                n => d(n as u32, [0, 0, 1]),
            },
        ),
        GroupLabel::Dihedral(n) if n >= 6 && n % 2 == 0 => vec![
            ("sigma".into(), d(n as u32 / 2, [0, 1, -1])),
            ("tau".into(), perm([0, 2, 1])),
        ],
        GroupLabel::Sym3 => vec![("sigma".into(), d(3, [0, 1, 2])), ("tau".into(), perm([0, 2, 1]))],
        GroupLabel::SmallGroup(30, 1) => {
            vec![("sigma".into(), d(15, [0, 1, 11])), ("tau".into(), perm([0, 2, 1]))]
        }
        GroupLabel::SmallGroup(39, 1) => {
            vec![("sigma".into(), d(13, [0, 1, 10])), ("tau".into(), perm([1, 2, 0]))]
        }
        GroupLabel::SmallGroup(150, 5) => vec![
            ("eta1".into(), perm([0, 2, 1])),
            ("eta2".into(), perm([1, 2, 0])),
            ("eta3".into(), ProjMat::diag([cyc(5, 1), CycNum::one(), CycNum::one()])?),
            ("eta4".into(), ProjMat::diag([CycNum::one(), cyc(5, 1), CycNum::one()])?),
        ],
        _ => return Err(Error::NoReference(label.to_string())),
    })
}

/// The reference matrix group for a label.
pub fn reference_group(label: &GroupLabel) -> Result<FinGroup> {
    closure_named(&reference_generators(label)?, DEFAULT_CAP)
}

/// Labels of the catalog, in table order.
pub const CATALOG_LABELS: [GroupLabel; 13] = [
    GroupLabel::SmallGroup(150, 5),
    GroupLabel::SmallGroup(39, 1),
    GroupLabel::SmallGroup(30, 1),
    GroupLabel::Cyclic(20),
    GroupLabel::Cyclic(16),
    GroupLabel::Cyclic(10),
    GroupLabel::Dihedral(10),
    GroupLabel::Cyclic(8),
    GroupLabel::Sym3,
    GroupLabel::Cyclic(5),
    GroupLabel::Cyclic(4),
    GroupLabel::Cyclic(3),
    GroupLabel::Cyclic(2),
];

/// Matches against the catalog references; `Unknown(order)` otherwise.
pub fn identify(g: &FinGroup) -> GroupLabel {
    let fp = fingerprint(g);
    for label in &CATALOG_LABELS {
        if label.order() != g.order() {
            continue;
        }
        let r = reference_group(label).expect("catalog labels have references");
        if fingerprint(&r) == fp && isomorphic(g, &r) {
            return *label;
        }
    }
    GroupLabel::Unknown(g.order())
}

/// Whether two distinct commuting involutions exist.
pub fn has_klein_four(g: &FinGroup) -> bool {
    let orders = g.element_orders();
    let inv: Vec<usize> = (0..g.order()).filter(|&i| orders[i] == 2).collect();
    inv.iter().enumerate().any(|(k, &a)| inv[k + 1..].iter().any(|&b| commutes(g, a, b)))
}

#[cfg(test)]
mod tests;
