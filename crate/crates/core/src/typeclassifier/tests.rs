use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use super::*;
use crate::smoothness::exact_certificate;

fn t(m: u32, a: u32, b: u32) -> CyclicType {
    CyclicType { m, a, b }
}

fn mono(i: u32, j: u32, k: u32) -> Monomial3 {
    Monomial3([i, j, k])
}

#[test]
fn admissible_orders_examples() {
    assert_eq!(admissible_orders(5).unwrap(), vec![1, 2, 3, 4, 5, 8, 10, 13, 15, 16, 20]);
    assert_eq!(admissible_orders(4).unwrap(), vec![1, 2, 3, 4, 6, 7, 8, 9, 12]);
    assert_eq!(admissible_orders(3), Err(Error::DegreeTooSmall { min: 4, got: 3 }));
    assert_eq!(full_conductor(5).unwrap(), 3120);
}

proptest! {
    #[test]
    fn admissible_orders_contain_one_and_two(d in 4u32..40) {
        let orders = admissible_orders(d).unwrap();
        prop_assert!(orders.contains(&1) && orders.contains(&2));
        prop_assert!(orders.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn weight_examples() {
    for ty in [t(20, 4, 5), t(7, 1, 3), t(2, 0, 1)] {
        assert_eq!(weight(&mono(5, 0, 0), &ty), 0);
    }
    assert_eq!(weight(&mono(1, 0, 4), &t(20, 4, 5)), 0);
    assert_eq!(weight(&mono(0, 4, 1), &t(16, 1, 12)), 0);
    assert_eq!(weight(&mono(3, 0, 2), &t(20, 4, 5)), 10);
}

#[test]
fn eigenclass_examples() {
    let c = eigenclasses(5, &t(20, 4, 5));
    assert_eq!(c[&0], vec![mono(5, 0, 0), mono(1, 0, 4), mono(0, 5, 0)]);
    let c = eigenclasses(5, &t(5, 1, 2));
    let want: BTreeSet<_> = [mono(5, 0, 0), mono(0, 5, 0), mono(0, 0, 5), mono(2, 1, 2), mono(1, 3, 1)].into();
    assert_eq!(c[&0].iter().copied().collect::<BTreeSet<_>>(), want);
    let c = eigenclasses(5, &t(2, 0, 1));
    assert_eq!(c[&0].len(), 12);
    assert!(c[&0].iter().all(|m| m.0[2] % 2 == 0));
}

proptest! {
    #[test]
    fn eigenclasses_partition_all_monomials(d in 1u32..9, m in 1u32..25, a in 0u32..25, b in 0u32..25) {
        let ty = t(m, a % m, b % m);
        let classes = eigenclasses(d, &ty);
        let total: usize = classes.values().map(Vec::len).sum();
        prop_assert_eq!(total as u32, (d + 2) * (d + 1) / 2);
        for (c, ms) in &classes {
            prop_assert!(ms.iter().all(|x| weight(x, &ty) == *c && x.degree() == d));
        }
    }
}

#[test]
fn type_text_round_trip() {
    let ty: CyclicType = "20,(4,5)".parse().unwrap();
    assert_eq!(ty, t(20, 4, 5));
    assert_eq!(ty.to_string(), "20,(4,5)");
    assert_eq!(" 5, ( 1 , 2 ) ".parse::<CyclicType>().unwrap(), t(5, 1, 2));
    assert_eq!("5,1,2".parse::<CyclicType>().unwrap(), t(5, 1, 2));
    for bad in ["", "5", "5,(1", "x,(1,2)", "0,(0,0)", "5,(1,2,3)"] {
        assert!(matches!(bad.parse::<CyclicType>(), Err(Error::Syntax { .. })), "{bad}");
    }
}

/// Independent oracle: the cyclic group generated by the type, as a set of
/// rebased weight pairs, minimized over coordinate permutations. Two types are
/// equivalent exactly when these keys agree.
fn group_key(m: u32, a: u32, b: u32) -> Vec<(u32, u32)> {
    let mut best: Option<Vec<(u32, u32)>> = None;
    for p in &PERMS {
        let mut set = BTreeSet::new();
        for k in 0..m {
            let w = [0, k * a % m, k * b % m];
            let v = p.map(|i| w[i]);
            set.insert(((v[1] + m - v[0]) % m, (v[2] + m - v[0]) % m));
        }
        let key: Vec<_> = set.into_iter().collect();
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    best.unwrap()
}

#[test]
fn canonical_type_matches_group_oracle() {
    for m in 2..=20u32 {
        let mut least: BTreeMap<Vec<(u32, u32)>, (u32, u32)> = BTreeMap::new();
        for a in 0..m {
            for b in a + 1..m {
                if projective_order(m, a, b) == m {
                    least.entry(group_key(m, a, b)).or_insert((a, b));
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                if projective_order(m, a, b) != m {
                    assert_eq!(canonical_type(m, a, b), Err(Error::BadType { m, a, b }));
                    continue;
                }
                let c = canonical_type(m, a, b).unwrap();
                assert_eq!((c.a, c.b), least[&group_key(m, a, b)], "{m},({a},{b})");
                assert_eq!(canonical_type(c.m, c.a, c.b).unwrap(), c);
            }
        }
    }
}

#[test]
fn canonical_type_examples() {
    assert_eq!(canonical_type(5, 2, 4).unwrap(), t(5, 1, 2));
    assert_eq!(canonical_type(20, 4, 5).unwrap(), t(20, 1, 5));
    assert_eq!(canonical_type(15, 1, 11).unwrap(), t(15, 1, 5));
    assert_eq!(canonical_type(4, 1, 3).unwrap(), t(4, 1, 2));
    assert_eq!(canonical_type(1, 0, 0).unwrap(), t(1, 0, 0));
    assert!(canonical_type(20, 4, 8).is_err());
}

proptest! {
    #[test]
    fn canonical_type_is_orbit_invariant(m in 2u32..40, a in 0u32..40, b in 0u32..40, u in 1u32..40, s in 0u32..40, p in 0usize..6) {
        let (a, b) = (a % m, b % m);
        prop_assume!(projective_order(m, a, b) == m && u.gcd(&m) == 1);
        let w = [0, a, b];
        let v = PERMS[p].map(|i| (u * w[i] + s) % m);
        let moved = canonical_type(m, (v[1] + m - v[0]) % m, (v[2] + m - v[0]) % m).unwrap();
        prop_assert_eq!(moved, canonical_type(m, a, b).unwrap());
    }
}

#[test]
fn type_of_examples() {
    let m = ProjMat::diag_roots(15, [0, 1, 11]);
    assert_eq!(type_of(&m).unwrap(), canonical_type(15, 1, 11).unwrap());
    assert_eq!(type_of(&ProjMat::permutation([1, 2, 0])).unwrap(), t(3, 1, 2));
    assert_eq!(type_of(&ProjMat::identity()).unwrap(), t(1, 0, 0));
    assert_eq!(type_of(&ProjMat::permutation([2, 1, 0])).unwrap(), t(2, 0, 1));
    let not_monomial = ProjMat::from_ints([[1, 1, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
    assert_eq!(type_of(&not_monomial), Err(Error::NotMonomial));
    let not_root = ProjMat::from_ints([[1, 0, 0], [0, 2, 0], [0, 0, 1]]).unwrap();
    assert_eq!(type_of(&not_root), Err(Error::NotMonomial));
}

#[test]
fn type_of_diagonal_is_canonical_type() {
    for m in admissible_orders(5).unwrap() {
        for a in 0..m {
            for b in 0..m {
                if projective_order(m, a, b) == m {
                    let d = ProjMat::diag_roots(m, [0, a as i64, b as i64]);
                    assert_eq!(type_of(&d).unwrap(), canonical_type(m, a, b).unwrap(), "{m},({a},{b})");
                }
            }
        }
    }
}

#[test]
fn type_of_permuted_monomial_matches_conjugate() {
    // [Z; X*E(5); Y] cubed is diagonal; its type is that of the conjugate
    // diagonal form.
    let mm = MonomialMat::new([2, 0, 1], [0, 1, 0], 5);
    let (p, d) = crate::projlinear::diagonalize_monomial(&mm);
    assert_eq!(p.inverse().mul(&mm.to_projmat()).mul(&p), d);
    assert_eq!(type_of(&mm.to_projmat()).unwrap(), type_of(&d).unwrap());
}

#[test]
fn quintic_enumeration() {
    let fams = enumerate_types(5, &default_pool(), 0).unwrap();
    let smooth: Vec<_> = fams.iter().filter(|f| f.is_smooth()).collect();
    let summary: Vec<(String, u32, usize)> = smooth.iter().map(|f| (f.ty.to_string(), f.class, f.basis.len())).collect();
    let want: Vec<(String, u32, usize)> = [
        ("2,(0,1)", 0, 12),
        ("3,(1,2)", 0, 7),
        ("4,(0,1)", 0, 8),
        ("4,(1,2)", 0, 6),
        ("5,(0,1)", 0, 7),
        ("5,(1,2)", 0, 5),
        ("8,(1,4)", 0, 4),
        ("10,(1,5)", 5, 4),
        ("13,(1,4)", 4, 3),
        ("15,(1,5)", 5, 3),
        ("16,(1,4)", 4, 3),
        ("20,(1,5)", 5, 3),
    ]
    .iter()
    .map(|&(s, c, n)| (s.to_string(), c, n))
    .collect();
    assert_eq!(summary, want);
    assert!(fams.iter().all(|f| f.status != FamilyStatus::NoWitness));

    let orders: BTreeSet<u32> = smooth.iter().map(|f| f.ty.m).collect();
    assert_eq!(orders, [2, 3, 4, 5, 8, 10, 13, 15, 16, 20].into());

    for f in &smooth {
        let w = f.smooth_witness.as_ref().unwrap();
        assert!(exact_certificate(&w.curve).unwrap().smooth, "{}", f.ty);
        assert!(w.curve.is_invariant(&f.ty.matrix()).is_some(), "{}", f.ty);
        assert!(f.basis.iter().all(|m| weight(m, &f.ty) == f.class));
    }

    // Every published row is found: smooth rows among the smooth families,
    // and the reducible one as a family with a proved common factor.
    for r in quintic_reference_types() {
        let hits: Vec<_> = fams.iter().filter(|f| matches_reference(f, &r)).collect();
        assert_eq!(hits.len(), 1, "{}", r.ty);
        if r.ty == t(4, 1, 3) {
            assert!(matches!(hits[0].status, FamilyStatus::CommonFactor { .. }), "{}", r.ty);
        } else {
            assert!(hits[0].is_smooth(), "{}", r.ty);
        }
    }
}

#[test]
fn reference_rows_are_whole_eigenclasses() {
    let rows = quintic_reference_types();
    assert_eq!(rows.len(), 13);
    for r in rows {
        let support = r.family.support();
        let w = weight(support.iter().next().unwrap(), &r.ty);
        let class: BTreeSet<Monomial3> = eigenclasses(5, &r.ty)[&w].iter().copied().collect();
        assert_eq!(support, class, "{}", r.ty);
    }
}

#[test]
fn family_json_shape() {
    let fams = enumerate_types_within(5, &default_pool(), 0, Some(50)).unwrap();
    let f = fams.iter().find(|f| f.ty == t(20, 1, 5) && f.class == 5).unwrap();
    let v = serde_json::to_value(f).unwrap();
    assert_eq!(v["type"], "20,(1,5)");
    assert_eq!(v["status"], "smooth");
    assert_eq!(v["basis"].as_array().unwrap().len(), 3);
    assert!(v["witness"]["curve"].is_string());
    let excluded = fams.iter().find(|f| f.status.is_proof_of_exclusion()).unwrap();
    assert!(serde_json::to_value(excluded).unwrap()["witness"].is_null());
}
