//! Published cyclic types of smooth quintics and their eigenclass families,
//! in the coordinates they were published in.

use std::collections::BTreeSet;

use super::{canonical_type, enumerate::TypeFamily, CyclicType, PERMS};
use crate::polyring::{HomPoly, Monomial3};

/// A published type with its family.
#[derive(Clone, Debug)]
pub struct ReferenceType {
    pub ty: CyclicType,
    pub family: HomPoly,
}

// Each row: type, fixed part, and `(k, e)` for every term `Z^k · L_e`, where
// `L_e` is a generic binary form of degree `e` in `X, Y`.
const ROWS: [(&str, &str, &[(u32, u32)]); 13] = [
    ("20,(4,5)", "X^5+Y^5+X*Z^4", &[]),
    ("16,(1,12)", "X^5+Y^4*Z+X*Z^4", &[]),
    ("15,(1,11)", "X^5+Y^4*Z+Y*Z^4", &[]),
    ("13,(1,10)", "X^4*Y+Y^4*Z+Z^4*X", &[]),
    ("10,(2,5)", "X^5+Y^5+alpha*X*Z^4+b20*X^3*Z^2", &[]),
    ("8,(1,4)", "X^5+Y^4*Z+alpha*X*Z^4+b20*X^3*Z^2", &[]),
    ("5,(1,2)", "X^5+Y^5+Z^5+b31*X^2*Y*Z^2+b43*X*Y^3*Z", &[]),
    ("5,(0,1)", "Z^5", &[(0, 5)]),
    ("4,(1,3)", "X^5+X*(Z^4+alpha*Y^4+b42*Y^2*Z^2)+b21*X^3*Y*Z", &[]),
    ("4,(1,2)", "X^5+X*(Z^4+alpha*Y^4)+b20*X^3*Z^2+b32*X^2*Y^2*Z+b52*Y^2*Z^3", &[]),
    ("4,(0,1)", "", &[(4, 1), (0, 5)]),
    ("3,(1,2)", "X^5+Y^4*Z+alpha*Y*Z^4+b21*X^3*Y*Z+X^2*(b30*Z^3+b33*Y^3)+b42*X*Y^2*Z^2", &[]),
    ("2,(0,1)", "", &[(4, 1), (2, 3), (0, 5)]),
];

/// The thirteen published quintic types, largest order first.
pub fn quintic_reference_types() -> Vec<ReferenceType> {
    ROWS.iter()
        .map(|(ty, eq, parts)| {
            let mut family = if eq.is_empty() {
                HomPoly::zero(5)
            } else {
                HomPoly::parse(eq).expect("reference equations parse")
            };
            for &(k, e) in parts.iter() {
                let zk = HomPoly::sum_of_monomials(k, &[Monomial3([0, 0, k])]).expect("pure power");
                let part = zk.mul(&HomPoly::generic(e, Some(2), &format!("l{e}")));
                family = family.add(&part).expect("degrees agree");
            }
            ReferenceType { ty: ty.parse().expect("reference types parse"), family }
        })
        .collect()
}

/// Whether a computed family is the published one up to the identifying
/// moves: same canonical type, and a coordinate permutation carries the
/// published support onto the computed basis.
pub fn matches_reference(family: &TypeFamily, r: &ReferenceType) -> bool {
    let Ok(t) = canonical_type(r.ty.m, r.ty.a, r.ty.b) else {
        return false;
    };
    if t != family.ty {
        return false;
    }
    let basis: BTreeSet<Monomial3> = family.basis.iter().copied().collect();
    let support = r.family.support();
    support.len() == basis.len()
        && PERMS.iter().any(|p| support.iter().all(|m| basis.contains(&Monomial3([m.0[p[0]], m.0[p[1]], m.0[p[2]]]))))
}
