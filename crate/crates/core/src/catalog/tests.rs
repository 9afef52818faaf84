use std::collections::BTreeSet;

use super::*;
use crate::projlinear::{closure_named, DEFAULT_CAP};
use crate::typeclassifier::{admissible_orders, type_of};

fn stratum(id: &str) -> Stratum {
    builtin_strata().into_iter().find(|s| s.id == id).unwrap()
}

#[test]
fn table_shape() {
    let strata = builtin_strata();
    assert_eq!(strata.len(), 14);
    let orders: Vec<usize> = strata.iter().map(|s| s.label.order()).collect();
    assert_eq!(orders, vec![150, 39, 30, 20, 16, 10, 10, 8, 6, 5, 4, 4, 3, 2]);
    let c4: Vec<&Stratum> = strata.iter().filter(|s| s.label == GroupLabel::Cyclic(4)).collect();
    assert_eq!(c4.len(), 2);
    let t0 = type_of(&c4[0].generators[0].1).unwrap();
    let t1 = type_of(&c4[1].generators[0].1).unwrap();
    assert_ne!(t0, t1);
    assert!(t1.is_homology() && !t0.is_homology());
    assert_eq!(plane_genus(DEGREE), 6);
    let ids: BTreeSet<&str> = strata.iter().map(|s| s.id.as_str()).collect();
    assert_eq!(ids.len(), 14);
}

#[test]
fn generators_preserve_families_and_have_admissible_types() {
    let admissible = admissible_orders(DEGREE).unwrap();
    for s in builtin_strata() {
        for (name, g) in &s.generators {
            assert!(s.family.is_invariant(g).is_some(), "{} {name}", s.id);
            assert!(admissible.contains(&type_of(g).unwrap().m), "{} {name}", s.id);
        }
        let g = closure_named(&s.generators, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), s.label.order(), "{}", s.id);
    }
}

#[test]
fn assignments_round_trip() {
    let s = stratum("C10");
    let curve = HomPoly::parse("X^5+Y^5+X*Z^4-3*X^3*Z^2").unwrap();
    let a = assignment_for(&s.family, &curve).unwrap();
    assert_eq!(a["b20"], CycNum::from_int(-3));
    assert_eq!(s.family.specialize(&a).unwrap(), curve);
    assert!(s.restrictions_hold(&a).unwrap());
    let bad = HomPoly::parse("X^5+Y^5+2*X*Z^4").unwrap();
    assert!(assignment_for(&s.family, &bad).is_err());
    let outside = HomPoly::parse("X^5+Y^5+X*Z^4+X^2*Y^3").unwrap();
    assert!(assignment_for(&s.family, &outside).is_err());

    let d10 = stratum("D10");
    let zero = assignment_for(&d10.family, &HomPoly::parse("X^5+Y^5+Z^5").unwrap()).unwrap();
    assert!(!d10.restrictions_hold(&zero).unwrap());
    let one = assignment_for(&d10.family, &HomPoly::parse("X^5+Y^5+Z^5+X*Y^3*Z").unwrap()).unwrap();
    assert!(d10.restrictions_hold(&one).unwrap());
}

#[test]
fn every_stratum_verifies() {
    let report = verify_all(0);
    for r in &report.strata {
        assert_eq!(r.verdict, Verdict::Pass, "{}: {:?}", r.id, r);
    }
    for g in &report.global_checks {
        assert!(g.pass, "{g:?}");
    }
    assert_eq!(report.verdict, Verdict::Pass);
    let closures: Vec<Option<usize>> = report.strata.iter().map(|r| r.closure_order).collect();
    let want: Vec<Option<usize>> = [150, 39, 30, 20, 16, 10, 10, 8, 6, 5, 4, 4, 3, 2].map(Some).to_vec();
    assert_eq!(closures, want);
}

#[test]
fn verdicts_do_not_depend_on_seed() {
    let a = verify_all(0);
    let b = verify_all(12345);
    let v = |r: &VerificationReport| r.strata.iter().map(|s| s.verdict).collect::<Vec<_>>();
    assert_eq!(v(&a), v(&b));
    assert_eq!(a.verdict, b.verdict);
}

#[test]
fn fault_injection_fails_only_that_row() {
    let mut strata = builtin_strata();
    let bad = ProjMat::from_ints([[1, 0, 0], [0, 2, 0], [0, 0, 1]]).unwrap();
    strata[3].generators[0].1 = bad;
    let report = verify_strata(&strata, 0);
    assert_eq!(report.verdict, Verdict::Fail);
    for (k, r) in report.strata.iter().enumerate() {
        if k == 3 {
            assert_eq!(r.verdict, Verdict::Fail);
            assert!(!r.invariance[0].pass);
            assert!(r.invariance[0].lambda.is_none());
        } else {
            assert_eq!(r.verdict, Verdict::Pass, "{}", r.id);
        }
    }
}

#[test]
fn element_orders_follow_the_case_split() {
    let max_order = |id: &str| {
        let s = stratum(id);
        let g = closure_named(&s.generators, DEFAULT_CAP).unwrap();
        g.element_orders().into_iter().max().unwrap()
    };
    for id in ["C2", "C3", "C4 (non-homology)", "C4 (homology)", "C5", "S3", "D10"] {
        assert!(max_order(id) <= 5, "{id}");
    }
    assert_eq!(max_order("C8"), 8);
    assert_eq!(max_order("C10"), 10);
    assert_eq!(max_order("C20"), 20);
    assert_eq!(max_order("C16"), 16);
    assert_eq!(max_order("SG(30,1)"), 15);
    assert_eq!(max_order("SG(39,1)"), 13);
    for id in ["SG(39,1)", "SG(30,1)", "C20", "C16"] {
        assert!(stratum(id).params().is_empty(), "{id}");
    }
}

#[test]
fn global_algebra() {
    let r = elimination_resultant().unwrap();
    assert_eq!(r, parse_param_poly("400*t^4 - 20*beta^2*t^4").unwrap());
    let s5 = two_sqrt5();
    assert_eq!(&s5 * &s5, CycNum::from_int(20));
    let k = stratum("SG(39,1)");
    let g = closure_named(&k.generators, DEFAULT_CAP).unwrap();
    assert_eq!(klein_exponents(&g).unwrap(), vec![3]);
}

#[test]
fn classify_examples() {
    let klein = classify_curve(&HomPoly::parse("X^4*Y+Y^4*Z+Z^4*X").unwrap()).unwrap();
    assert!(klein.smooth);
    assert_eq!(klein.stabilizer_order, Some(39));
    assert_eq!(klein.label, Some(GroupLabel::SmallGroup(39, 1)));
    assert_eq!(klein.max_element_order, Some(13));
    assert!(klein.core_is_klein && !klein.core_is_fermat);
    assert_eq!(klein.core.as_deref(), Some("X^4*Y + X*Z^4 + Y^4*Z"));
    assert_eq!(klein.stratum.as_deref(), Some("SG(39,1)"));
    assert_eq!(klein.element_types.values().sum::<usize>(), 39);
    assert_eq!(klein.element_types["13,(1,4)"], 12);

    let desc = classify_curve(&HomPoly::parse("X^5+Y^5+Z^5+E(10)^6*Y^4*Z+Y*Z^4").unwrap()).unwrap();
    assert!(desc.smooth && desc.core_is_fermat);
    assert_eq!(desc.stabilizer_order, Some(10));
    assert_eq!(desc.label, Some(GroupLabel::Cyclic(10)));

    let bad = classify_curve(&HomPoly::parse("X^5").unwrap()).unwrap();
    assert!(!bad.smooth);
    assert_eq!(bad.reason.as_deref(), Some("singular or reducible"));
    assert!(bad.stabilizer_order.is_none());

    let c8 = classify_curve(&HomPoly::parse("X^5+Y^4*Z+X*Z^4+X^3*Z^2").unwrap()).unwrap();
    assert_eq!(c8.label, Some(GroupLabel::Cyclic(8)));
    assert_eq!(c8.stratum.as_deref(), Some("C8"));
    assert!(classify_curve(&HomPoly::parse("b*X^5+Y^5+Z^5").unwrap()).is_err());
}

#[test]
fn report_json_shape() {
    let r = verify_stratum(&stratum("C20"), 0);
    let v = serde_json::to_value(&r).unwrap();
    for key in ["label", "invariance", "closure_order", "identified", "samples", "degenerations", "verdict"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["label"], "C20");
    assert_eq!(v["identified"], "C20");
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["invariance"][0]["lambda"], "1");
    assert_eq!(v["samples"][0]["smooth"], true);
    assert_eq!(v["samples"][0]["stabilizer_order"], 20);
}
