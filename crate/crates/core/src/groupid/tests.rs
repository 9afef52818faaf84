use proptest::prelude::*;

use super::*;
use crate::projlinear::{closure, ProjMat};

fn m(s: &str) -> ProjMat {
    ProjMat::parse(s).unwrap()
}

fn grp(gens: &[&str]) -> FinGroup {
    closure(&gens.iter().map(|s| m(s)).collect::<Vec<_>>(), DEFAULT_CAP).unwrap()
}

fn d10() -> FinGroup {
    grp(&["diag(1, E(5), E(5)^2)", "[Z;Y;X]"])
}

fn fermat() -> FinGroup {
    reference_group(&GroupLabel::SmallGroup(150, 5)).unwrap()
}

/// Center and derived subgroup sizes by direct matrix arithmetic.
fn brute_center_and_derived(g: &FinGroup) -> (usize, usize) {
    let els = g.elements();
    let center = els.iter().filter(|a| els.iter().all(|b| a.mul(b) == b.mul(a))).count();
    let mut comms: Vec<ProjMat> = Vec::new();
    for a in els {
        for b in els {
            let c = a.inverse().mul(&b.inverse()).mul(a).mul(b);
            if !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    (center, closure(&comms, DEFAULT_CAP).unwrap().order())
}

#[test]
fn fingerprints() {
    let f = fingerprint(&d10());
    assert_eq!(f.order, 10);
    assert_eq!(f.element_orders, BTreeMap::from([(1, 1), (2, 5), (5, 4)]));
    assert!(!f.abelian);
    assert_eq!((f.center_order, f.derived_order), (1, 5));
    assert_eq!((f.center_order, f.derived_order), brute_center_and_derived(&d10()));

    let c8 = fingerprint(&grp(&["diag(1, E(8), E(8)^4)"]));
    assert!(c8.abelian);
    assert_eq!(c8.element_orders, BTreeMap::from([(1, 1), (2, 1), (4, 2), (8, 4)]));
    assert_eq!((c8.center_order, c8.derived_order), (8, 1));

    let fp = fingerprint(&fermat());
    assert!(!fp.abelian);
    // (C5 x C5) ⋊ S3 with S3 acting through the sum-zero plane: the derived
    // subgroup is the whole C5 x C5 extended by A3.
    assert_eq!((fp.center_order, fp.derived_order), brute_center_and_derived(&fermat()));
    assert_eq!(fp.derived_order, 75);
}

#[test]
fn references() {
    assert_eq!(reference_group(&GroupLabel::Cyclic(20)).unwrap().order(), 20);
    assert_eq!(reference_group(&GroupLabel::SmallGroup(30, 1)).unwrap().order(), 30);
    assert_eq!(reference_group(&GroupLabel::Sym3).unwrap().order(), 6);
    assert!(reference_group(&GroupLabel::Unknown(7)).is_err());
    for label in CATALOG_LABELS {
        let g = reference_group(&label).unwrap();
        assert_eq!(g.order(), label.order(), "{label}");
        assert_eq!(identify(&g), label);
    }
}

#[test]
fn isomorphism_examples() {
    let c10 = reference_group(&GroupLabel::Cyclic(10)).unwrap();
    let dref = reference_group(&GroupLabel::Dihedral(10)).unwrap();
    assert!(!isomorphic(&c10, &dref));
    assert!(isomorphic(&d10(), &dref));
    assert!(isomorphic(&d10(), &d10()));
    // Same order, different structure.
    let v4 = grp(&["diag(1,-1,1)", "diag(1,1,-1)"]);
    assert!(!isomorphic(&v4, &reference_group(&GroupLabel::Cyclic(4)).unwrap()));
    // C5 x S3 is the catalog group of order 30.
    let c5s3 = grp(&["diag(1,E(5),E(5))", "diag(1,E(3),E(3)^2)", "[X;Z;Y]"]);
    assert_eq!(c5s3.order(), 30);
    assert_eq!(identify(&c5s3), GroupLabel::SmallGroup(30, 1));
}

#[test]
fn identification() {
    let klein = grp(&["diag(1, E(13), E(13)^10)", "[Y;Z;X]"]);
    assert_eq!(identify(&klein), GroupLabel::SmallGroup(39, 1));
    assert_eq!(identify(&fermat()), GroupLabel::SmallGroup(150, 5));
    assert_eq!(identify(&grp(&["diag(1, E(7), E(7)^2)"])), GroupLabel::Unknown(7));
    assert_eq!(identify(&grp(&["[X;Y;Z]"])), GroupLabel::Unknown(1));
    // A cyclic group of order 20 built from other generators is still C20.
    assert_eq!(identify(&grp(&["diag(1, E(4), E(5))"])), GroupLabel::Cyclic(20));
}

#[test]
fn klein_four() {
    assert!(!has_klein_four(&d10()));
    assert!(has_klein_four(&grp(&["diag(1,-1,1)", "diag(1,1,-1)"])));
    for n in [2usize, 4, 8, 10, 16, 20] {
        assert!(!has_klein_four(&reference_group(&GroupLabel::Cyclic(n)).unwrap()));
    }
}

#[test]
fn presentations() {
    let klein = reference_group(&GroupLabel::SmallGroup(39, 1)).unwrap();
    let holds = |e: i64| {
        verify_presentation(&klein, &["sigma^13", "tau^3", &format!("tau^-1 sigma tau sigma^-{e}")]).unwrap()
    };
    assert!(holds(3) ^ holds(9));
    assert!(holds(3));
    let f = fermat();
    let rels = [
        "(eta1 eta2)^2",
        "(eta1 eta3)(eta3 eta1)^-1",
        "(eta3 eta4)(eta4 eta3)^-1",
        "eta1 eta4^2 eta1 (eta3 eta4)^-3",
        "eta2 eta3 eta2^-1 (eta3 eta4)^-4",
    ];
    assert!(verify_presentation(&f, &rels).unwrap());
    assert!(!verify_presentation(&f, &["eta3 eta2"]).unwrap());
    assert!(verify_presentation(&f, &[]).unwrap());
    assert!(verify_presentation(&f, &["eta1*eta1 = eta2^3"]).unwrap());
    assert_eq!(verify_presentation(&f, &["eta5"]), Err(Error::UnknownGenerator("eta5".into())));
    let sg30 = reference_group(&GroupLabel::SmallGroup(30, 1)).unwrap();
    assert!(verify_presentation(&sg30, &["tau^2", "sigma^15", "(tau sigma)^2 sigma^3"]).unwrap());
}

#[test]
fn label_strings() {
    for s in ["C20", "D10", "S3", "SG(30,1)", "SG(39,1)", "SG(150,5)", "Unknown(7)"] {
        let l: GroupLabel = s.parse().unwrap();
        assert_eq!(l.to_string(), s);
    }
    assert!("Q8".parse::<GroupLabel>().is_err());
}

fn sample_group() -> impl Strategy<Value = FinGroup> {
    prop::sample::select(CATALOG_LABELS.to_vec()).prop_map(|l| reference_group(&l).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn isomorphism_is_an_equivalence(a in sample_group(), b in sample_group(), c in sample_group()) {
        prop_assert!(isomorphic(&a, &a));
        prop_assert_eq!(isomorphic(&a, &b), isomorphic(&b, &a));
        if isomorphic(&a, &b) && isomorphic(&b, &c) {
            prop_assert!(isomorphic(&a, &c));
        }
        if isomorphic(&a, &b) {
            prop_assert_eq!(fingerprint(&a), fingerprint(&b));
        }
    }

    #[test]
    fn conjugates_are_isomorphic(a in sample_group(), p in crate::polyring::tests::arb_projmat()) {
        let b = a.conjugate(&p, DEFAULT_CAP).unwrap();
        prop_assert!(isomorphic(&a, &b));
        prop_assert_eq!(identify(&b), identify(&a));
    }
}
