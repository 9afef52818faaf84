use proptest::prelude::*;

use super::*;
use crate::cyclotomic::{root_of_unity, CycNum};
use crate::error::Error;
use crate::projlinear::ProjMat;

fn p(s: &str) -> HomPoly {
    HomPoly::parse(s).unwrap()
}

fn num(v: i64) -> ParamPoly {
    ParamPoly::constant(CycNum::from_int(v))
}

#[test]
fn parse_examples() {
    let f = p("X^5+Y^5+Z^5");
    assert_eq!(f.degree(), 5);
    assert_eq!(f.num_terms(), 3);
    let g = p("X^5+Y^4*Z+X*Z^4+b20*X^3*Z^2");
    assert_eq!(g.num_terms(), 4);
    assert_eq!(g.params().into_iter().collect::<Vec<_>>(), vec!["b20".to_string()]);
    assert!(matches!(HomPoly::parse("X^2+Y^3"), Err(Error::NotHomogeneous(3, 2))));
    assert!(matches!(HomPoly::parse("X^2+Q"), Err(Error::UnknownSymbol(s)) if s == "Q"));
    assert!(matches!(HomPoly::parse("X^2+"), Err(Error::Syntax { pos: 4, .. })));
    assert!(matches!(HomPoly::parse("X^2 # Y"), Err(Error::Syntax { pos: 4, .. })));
    assert!(matches!(HomPoly::parse("X^-2"), Err(Error::Syntax { pos: 2, .. })));
}

#[test]
fn parse_forms_agree() {
    assert_eq!(p("X^4Y + 2 Y^4 Z"), p("X^4*Y+2*Y^4*Z"));
    assert_eq!(p("XYZ"), p("X*Y*Z"));
    assert_eq!(p("(X+Y)^2"), p("X^2+2*X*Y+Y^2"));
    assert_eq!(p("1/2*X - 3/4*Y"), p("(2*X-3*Y)/4"));
    assert_eq!(p("E(4)^2*X"), p("-X"));
    assert_eq!(p("-(-X)"), p("X"));
    assert_eq!(parse_constant("E(3)+E(3)^2").unwrap(), CycNum::from_int(-1));
    assert!(matches!(parse_constant("X"), Err(Error::NotNumeric)));
}

#[test]
fn printer_is_graded_lex() {
    assert_eq!(p("Z^5+X*Z^4+Y^5+X^5").to_string(), "X^5 + X*Z^4 + Y^5 + Z^5");
    assert_eq!(p("X^5-3*Y^5+b20*X^3*Z^2").to_string(), "X^5 + b20*X^3*Z^2 - 3*Y^5");
    assert_eq!(p("(1+E(5))*X^5+(b+2*c)*Y^5").to_string(), "(1 + E(5))*X^5 + (b + 2*c)*Y^5");
    assert_eq!(p("-E(5)*X").to_string(), "E(10)^7*X");
    assert_eq!(p("0").to_string(), "0");
}

#[test]
fn substitution_examples() {
    let fermat = p("X^5+Y^5+Z^5");
    assert_eq!(fermat.substitute_linear(&ProjMat::identity()), fermat);
    assert_eq!(fermat.substitute_linear(&ProjMat::permutation([1, 2, 0])), fermat);
    let klein = p("X^4*Y+Y^4*Z+Z^4*X");
    let sigma = ProjMat::diag_roots(13, [0, 1, 10]);
    assert_eq!(klein.substitute_linear(&sigma), klein.scale_num(&root_of_unity(13, 1)));
    assert_eq!(klein.is_invariant(&sigma), Some(root_of_unity(13, 1)));
}

#[test]
fn invariance_examples() {
    let fermat = p("X^5+Y^5+Z^5");
    assert_eq!(fermat.is_invariant(&ProjMat::permutation([0, 2, 1])), Some(CycNum::one()));
    let fam = p("X^5+Y^5+X*Z^4+b20*X^3*Z^2");
    assert_eq!(fam.is_invariant(&ProjMat::diag_roots(10, [0, 2, 5])), Some(CycNum::one()));
    // X^3*Z^2 has weight 10 under diag(1, E(20)^4, E(20)^5), so only the
    // parameter-free member is preserved by that matrix.
    assert_eq!(fam.is_invariant(&ProjMat::diag_roots(20, [0, 4, 5])), None);
    let c20 = p("X^5+Y^5+X*Z^4");
    assert_eq!(c20.is_invariant(&ProjMat::diag_roots(20, [0, 4, 5])), Some(CycNum::one()));
    let d = ProjMat::diag([1, 2, 1].map(CycNum::from_int)).unwrap();
    assert_eq!(fermat.is_invariant(&d), None);
    // A parameter-dependent scalar does not count.
    let g = p("a*X^2+Y^2");
    assert_eq!(g.is_invariant(&ProjMat::permutation([1, 0, 2])), None);
}

#[test]
fn core_examples() {
    assert_eq!(p("X^5+Y^5+Z^5+u*Y^4*Z+u*Y*Z^4").core().unwrap(), p("X^5+Y^5+Z^5"));
    let klein = p("X^4*Y+Y^4*Z+Z^4*X");
    assert_eq!(klein.core().unwrap(), klein);
    assert_eq!(p("X^5").core().unwrap(), p("X^5"));
    assert_eq!(HomPoly::zero(5).core(), Err(Error::ZeroPolynomial));
}

#[test]
fn partial_examples() {
    let [fx, fy, fz] = p("X^5+Y^5+Z^5").partials();
    assert_eq!((fx, fy, fz), (p("5*X^4"), p("5*Y^4"), p("5*Z^4")));
    let [fx, fy, fz] = p("X^4*Y").partials();
    assert_eq!(fx, p("4*X^3*Y"));
    assert_eq!(fy, p("X^4"));
    assert!(fz.is_zero());
}

#[test]
fn specialize_examples() {
    let fam = p("X^5+Y^4*Z+X*Z^4+b20*X^3*Z^2");
    let a = Assignment::from([("b20".to_string(), CycNum::one())]);
    assert_eq!(fam.specialize(&a).unwrap(), p("X^5+Y^4*Z+X*Z^4+X^3*Z^2"));
    let d10 = p("X^5+Y^5+Z^5+b31*X^2*Y*Z^2+b43*X*Y^3*Z");
    let zero = Assignment::from([
        ("b31".to_string(), CycNum::zero()),
        ("b43".to_string(), CycNum::zero()),
    ]);
    assert_eq!(d10.specialize(&zero).unwrap(), p("X^5+Y^5+Z^5"));
    assert_eq!(p("X^5+Y^5").specialize(&Assignment::new()).unwrap(), p("X^5+Y^5"));
    assert!(matches!(fam.specialize(&Assignment::new()), Err(Error::MissingParameter(s)) if s == "b20"));
}

fn pp(s: &str) -> ParamPoly {
    parse_constant_param(s)
}

/// Reads a degree-0 expression with parameters.
fn parse_constant_param(s: &str) -> ParamPoly {
    let f = HomPoly::parse(s).unwrap();
    assert_eq!(f.degree(), 0);
    f.coeff(&Monomial3::new(0, 0, 0)).cloned().unwrap_or_default()
}

#[test]
fn resultant_sign_convention() {
    assert_eq!(resultant(&pp("x-a"), &pp("x-b"), "x").unwrap(), pp("a-b"));
    assert_eq!(resultant(&pp("x^2-2"), &pp("x-1"), "x").unwrap(), num(-1));
    assert_eq!(resultant(&pp("3"), &pp("x^2+1"), "x").unwrap(), num(9));
    assert!(resultant(&ParamPoly::zero(), &pp("x"), "x").is_err());
}

#[test]
fn resultant_matches_quadratic_closed_form() {
    let p1 = pp("5*s^2+beta*t*s-3*t^2");
    let p2 = pp("5*s^2-beta*t*s+t^2");
    let a = p1.coefficients_in("s");
    let b = p2.coefficients_in("s");
    let x = &(&a[2] * &b[0]) - &(&a[0] * &b[2]);
    let y = &(&a[2] * &b[1]) - &(&a[1] * &b[2]);
    let z = &(&a[1] * &b[0]) - &(&a[0] * &b[1]);
    let oracle = &(&x * &x) - &(&y * &z);
    let r = resultant(&p1, &p2, "s").unwrap();
    assert_eq!(r, oracle);
    assert_eq!(r, pp("400*t^4-20*beta^2*t^4"));
}

fn arb_coeff() -> impl Strategy<Value = ParamPoly> {
    prop_oneof![
        4 => (-3i64..=3).prop_map(num),
        1 => (0i64..5).prop_map(|k| ParamPoly::constant(root_of_unity(5, k))),
        1 => (0i64..3).prop_map(|k| ParamPoly::constant(&root_of_unity(3, k) + &CycNum::from_int(2))),
        1 => prop::sample::select(vec!["u", "b20", "c_1"]).prop_map(ParamPoly::param),
    ]
}

pub(crate) fn arb_hompoly(max_degree: u32) -> impl Strategy<Value = HomPoly> {
    (1..=max_degree).prop_flat_map(|d| {
        let monos = Monomial3::all_of_degree(d);
        let n = monos.len();
        proptest::collection::vec((0..n, arb_coeff()), 1..=6).prop_map(move |ts| {
            HomPoly::from_terms(d, ts.into_iter().map(|(i, c)| (monos[i], c))).unwrap()
        })
    })
    .prop_filter("nonzero", |f| !f.is_zero())
}

pub(crate) fn arb_projmat() -> impl Strategy<Value = ProjMat> {
    proptest::collection::vec(-2i64..=2, 9).prop_filter_map("singular", |v| {
        ProjMat::from_ints([[v[0], v[1], v[2]], [v[3], v[4], v[5]], [v[6], v[7], v[8]]]).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn composition_law(f in arb_hompoly(4), m in arb_projmat(), n in arb_projmat()) {
        let lhs = f.substitute_linear(&m).substitute_linear(&n);
        let rhs = f.substitute_linear(&m.mul(&n));
        // Normal forms differ by a scalar; compare up to that scalar.
        prop_assert!(lhs.proportionality(&rhs).is_some() || (lhs.is_zero() && rhs.is_zero()));
    }

    #[test]
    fn identity_is_invariant(f in arb_hompoly(5)) {
        prop_assert_eq!(f.is_invariant(&ProjMat::identity()), Some(CycNum::one()));
    }

    #[test]
    fn core_is_idempotent(f in arb_hompoly(5)) {
        let c = f.core().unwrap();
        prop_assert_eq!(c.core().unwrap(), c);
    }

    #[test]
    fn print_parse_round_trip(f in arb_hompoly(5)) {
        let text = f.to_string();
        prop_assert_eq!(HomPoly::parse(&text).unwrap(), f, "{}", text);
    }

    #[test]
    fn euler_identity(f in arb_hompoly(5)) {
        let reparsed = HomPoly::parse(&f.to_string()).unwrap();
        prop_assert!(reparsed.satisfies_euler_identity());
    }
}
