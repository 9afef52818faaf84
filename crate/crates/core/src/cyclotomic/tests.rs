use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

use super::*;

fn e(n: u32, k: i64) -> CycNum {
    root_of_unity(n, k)
}

fn q(p: i64, d: i64) -> CycNum {
    CycNum::from_rational(&Rational::new(BigInt::from(p), BigInt::from(d)))
}

#[test]
fn basic_roots() {
    assert_eq!(e(2, 1), CycNum::from_int(-1));
    assert_eq!(e(4, 2), CycNum::from_int(-1));
    assert!((&e(5, 1) * &e(5, 4)).is_one());
    assert!((&e(8, 1) * &e(8, 7)).is_one());
    assert_eq!(&e(3, 1) + &e(3, 2), CycNum::from_int(-1));
    assert_eq!(CycNum::from_int(2).inv().unwrap(), q(1, 2));
    assert_eq!(CycNum::zero().inv(), Err(crate::Error::DivisionByZero));
}

#[test]
fn embeddings() {
    assert_eq!(e(2, 1).embed(4).unwrap().conductor(), 4);
    assert_eq!(e(2, 1).embed(4).unwrap(), e(4, 2));
    assert!(CycNum::one().embed(13).unwrap().is_one());
    assert!(e(5, 1).embed(7).is_err());
}

#[test]
fn sqrt5_gauss_sum() {
    let s = (&e(5, 1) + &e(5, 4)).embed(20).unwrap();
    let r = &CycNum::one() + &(&CycNum::from_int(2) * &s);
    assert_eq!(&r * &r, CycNum::from_int(5));
}

#[test]
fn root_detection() {
    assert_eq!(CycNum::from_int(-1).as_root_of_unity(), Some((2, 1)));
    assert_eq!(CycNum::from_int(2).as_root_of_unity(), None);
    assert_eq!(CycNum::one().as_root_of_unity(), Some((1, 0)));
    assert_eq!(e(20, 5).as_root_of_unity(), Some((4, 1)));
    // -E(5) has order 10 and lives in the conductor-5 field.
    assert_eq!((-e(5, 1)).as_root_of_unity(), Some((10, 7)));
    assert_eq!(e(10, 7), -e(5, 1));
    assert_eq!((&e(5, 1) + &CycNum::one()).as_root_of_unity(), None);
}

#[test]
fn minimal_order_matches_powering() {
    for n in 1..=40u32 {
        for k in 0..n as i64 {
            let x = e(n, k);
            let (ord, _) = x.as_root_of_unity().unwrap();
            assert!(x.pow(ord as u64).is_one());
            for m in 1..ord {
                assert!(!x.pow(m as u64).is_one(), "n={n} k={k} m={m}");
            }
        }
    }
}

#[test]
fn generic_inverse() {
    let x = &(&e(13, 1) + &CycNum::from_int(3)) + &q(1, 7);
    let y = x.inv().unwrap();
    assert!((&x * &y).is_one());
    let z = &e(15, 2) - &e(15, 7);
    assert!((&z * &z.inv().unwrap()).is_one());
}

#[test]
fn display_forms() {
    assert_eq!(q(-3, 4).to_string(), "-3/4");
    assert_eq!(e(20, 5).to_string(), "E(4)");
    assert_eq!(e(13, 10).to_string(), "E(13)^10");
    assert_eq!((-e(5, 1)).to_string(), "E(10)^7");
    let s = &e(5, 1) + &CycNum::from_int(2);
    assert_eq!(s.to_string(), "2 + E(5)");
    assert_eq!(s.display_terms(), 2);
}

#[test]
fn primitivity_up_to_60() {
    for n in 1..=60u32 {
        for k in 1..n as i64 {
            let x = e(n, k);
            assert!(x.pow(n as u64).is_one());
            assert_eq!(x.is_one(), k % n as i64 == 0);
        }
        assert_eq!(cyclotomic_polynomial(n).last(), Some(&BigInt::one()));
    }
}

fn arb_elem(n: u32) -> impl Strategy<Value = CycNum> {
    let phi = euler_phi(n) as usize;
    proptest::collection::vec((-6i64..=6, 1i64..=4), phi).prop_map(move |cs| {
        let coeffs: Vec<Rational> = cs
            .into_iter()
            .map(|(p, d)| Rational::new(BigInt::from(p), BigInt::from(d)))
            .collect();
        CycNum::from_coeffs(n, &coeffs)
    })
}

fn arb_triple() -> impl Strategy<Value = (CycNum, CycNum, CycNum)> {
    (1u32..=20).prop_flat_map(|n| (arb_elem(n), arb_elem(n), arb_elem(n)))
}

fn arb_mixed_pair() -> impl Strategy<Value = (CycNum, CycNum)> {
    (1u32..=12, 1u32..=12).prop_flat_map(|(n, m)| (arb_elem(n), arb_elem(m)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((a, b, c) in arb_triple()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn embed_is_ring_hom((a, b) in arb_mixed_pair(), k in 1u32..=3) {
        let l = a.conductor() * b.conductor() * k;
        let ea = a.embed(l).unwrap();
        let eb = b.embed(l).unwrap();
        prop_assert_eq!((&a * &b).embed(l).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).embed(l).unwrap(), &ea + &eb);
        prop_assert_eq!(ea, a);
    }

    #[test]
    fn powi_roundtrip(a in (1u32..=16).prop_flat_map(arb_elem), k in -4i64..=4) {
        prop_assume!(!a.is_zero());
        let p = a.powi(k).unwrap();
        prop_assert!((&p * &a.powi(-k).unwrap()).is_one());
    }
}
