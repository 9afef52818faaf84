//! Built-in strata of smooth quintics by full automorphism group, and the
//! harness that checks them.
//!
//! Each [`Stratum`] carries generators in `PGL_3`, a parametric family they
//! preserve, the parameter restrictions, stored smooth samples and
//! degenerations that leave the stratum.

mod classify;
mod verify;

use std::collections::BTreeSet;

pub use classify::{classify_curve, classify_curve_at, fermat, klein_forms, Classification};
pub use verify::{
    elimination_resultant, klein_exponents, verify_all, verify_strata, verify_stratum, DegenerationCheck,
    GlobalCheck, InvarianceCheck, SampleCheck, StratumReport, Verdict, VerificationReport, FERMAT_RELATIONS,
};

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::groupid::GroupLabel;
use crate::polyring::{parse_param_poly, Assignment, HomPoly, Monomial3, ParamPoly};
use crate::projlinear::ProjMat;

/// Degree of every curve in the catalog.
pub const DEGREE: u32 = 5;

/// Genus of a smooth plane curve of degree `d`.
pub fn plane_genus(d: u32) -> u32 {
    (d - 1) * (d.saturating_sub(2)) / 2
}

/// Expected outcome of specializing a family outside its restrictions.
#[derive(Clone, Debug)]
pub enum Expected {
    /// The curve is singular (or reducible).
    Singular,
    /// The curve is smooth and `witness`, together with the generators,
    /// generates a group of order `order`.
    LargerGroup { witness: ProjMat, order: usize },
    /// The curve is smooth and projectively equivalent to the Fermat
    /// quintic through a transformation outside every cyclotomic field, so
    /// only the monomial stabilizer in these coordinates (`visible_order`)
    /// is checked.
    FermatEquivalent { visible_order: usize },
}

/// A specialization that violates a restriction, with its expected effect.
#[derive(Clone, Debug)]
pub struct Degeneration {
    pub assignment: Assignment,
    pub expected: Expected,
}

/// One stratum: a group, its representation and its family.
#[derive(Clone, Debug)]
pub struct Stratum {
    /// Distinguishes the two representations of `C4`.
    pub id: String,
    pub label: GroupLabel,
    pub generators: Vec<(String, ProjMat)>,
    pub family: HomPoly,
    /// Each polynomial must not vanish.
    pub nonzero: Vec<ParamPoly>,
    /// Each set of polynomials must not vanish simultaneously.
    pub prohibited: Vec<Vec<ParamPoly>>,
    /// No extra automorphisms allowed; checked through the monomial
    /// stabilizer of the samples.
    pub not_above: bool,
    pub samples: Vec<Assignment>,
    pub degenerations: Vec<Degeneration>,
}

impl Stratum {
    /// Whether an assignment satisfies every explicit restriction.
    pub fn restrictions_hold(&self, a: &Assignment) -> Result<bool> {
        for p in &self.nonzero {
            if p.evaluate(a)?.is_zero() {
                return Ok(false);
            }
        }
        for set in &self.prohibited {
            let mut all_zero = true;
            for p in set {
                all_zero &= p.evaluate(a)?.is_zero();
            }
            if all_zero {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Parameters of the family.
    pub fn params(&self) -> BTreeSet<String> {
        self.family.params()
    }
}

/// Reads the assignment that specializes `family` to `curve`. Every family
/// coefficient must be a constant or a constant times one parameter.
pub fn assignment_for(family: &HomPoly, curve: &HomPoly) -> Result<Assignment> {
    let mut out = Assignment::new();
    for (m, c) in family.terms() {
        let want = curve.coeff(m).map(|c| c.as_constant().ok_or(Error::NotNumeric)).transpose()?.unwrap_or_default();
        if let Some(k) = c.as_constant() {
            if k != want {
                return Err(Error::MissingParameter(format!("fixed coefficient of {m}")));
            }
            continue;
        }
        let (pp, k) = c.single_term().ok_or(Error::NotNumeric)?;
        let params: Vec<String> = c.params().into_iter().collect();
        if params.len() != 1 || pp.exponent_of(&params[0]) != 1 {
            return Err(Error::NotNumeric);
        }
        let value = &want * &k.inv()?;
        if let Some(old) = out.insert(params[0].clone(), value.clone()) {
            if old != value {
                return Err(Error::MissingParameter(params[0].clone()));
            }
        }
    }
    if family.specialize(&out)? != *curve {
        return Err(Error::MissingParameter("curve is not a member of the family".into()));
    }
    Ok(out)
}

struct Row {
    id: &'static str,
    label: GroupLabel,
    generators: &'static [(&'static str, &'static str)],
    family: &'static str,
    /// `(k, e)`: add `Z^k · L_e`, a generic binary form of degree `e` in
    /// `X, Y`.
    binary: &'static [(u32, u32)],
    nonzero: &'static [&'static str],
    prohibited: &'static [&'static [&'static str]],
    not_above: bool,
    samples: &'static [&'static str],
    degenerations: &'static [(&'static str, Expect)],
}

enum Expect {
    Singular,
    Larger(&'static str, usize),
    Fermat(usize),
}

const SQRT5_TWICE: &str = "(2+4*E(5)+4*E(5)^4)";

const ROWS: [Row; 14] = [
    Row {
        id: "SG(150,5)",
        label: GroupLabel::SmallGroup(150, 5),
        generators: &[("eta1", "[X;Z;Y]"), ("eta2", "[Y;Z;X]"), ("eta3", "diag(E(5),1,1)"), ("eta4", "diag(1,E(5),1)")],
        family: "X^5+Y^5+Z^5",
        binary: &[],
        nonzero: &[],
        prohibited: &[],
        not_above: false,
        samples: &["X^5+Y^5+Z^5"],
        degenerations: &[],
    },
    Row {
        id: "SG(39,1)",
        label: GroupLabel::SmallGroup(39, 1),
        generators: &[("sigma", "diag(1,E(13),E(13)^10)"), ("tau", "[Y;Z;X]")],
        family: "X^4*Y+Y^4*Z+Z^4*X",
        binary: &[],
        nonzero: &[],
        prohibited: &[],
        not_above: false,
        samples: &["X^4*Y+Y^4*Z+Z^4*X"],
        degenerations: &[],
    },
    Row {
        id: "SG(30,1)",
        label: GroupLabel::SmallGroup(30, 1),
        generators: &[("sigma", "diag(1,E(15),E(15)^11)"), ("tau", "[X;Z;Y]")],
        family: "X^5+Y^4*Z+Y*Z^4",
        binary: &[],
        nonzero: &[],
        prohibited: &[],
        not_above: false,
        samples: &["X^5+Y^4*Z+Y*Z^4"],
        degenerations: &[],
    },
    Row {
        id: "C20",
        label: GroupLabel::Cyclic(20),
        generators: &[("sigma", "diag(1,E(20)^4,E(20)^5)")],
        family: "X^5+Y^5+X*Z^4",
        binary: &[],
        nonzero: &[],
        prohibited: &[],
        not_above: false,
        samples: &["X^5+Y^5+X*Z^4"],
        degenerations: &[],
    },
    Row {
        id: "C16",
        label: GroupLabel::Cyclic(16),
        generators: &[("sigma", "diag(1,E(16),E(16)^12)")],
        family: "X^5+Y^4*Z+X*Z^4",
        binary: &[],
        nonzero: &[],
        prohibited: &[],
        not_above: false,
        samples: &["X^5+Y^4*Z+X*Z^4"],
        degenerations: &[],
    },
    Row {
        id: "C10",
        label: GroupLabel::Cyclic(10),
        generators: &[("sigma", "diag(1,E(10)^2,E(10)^5)")],
        family: "X^5+Y^5+X*Z^4+b20*X^3*Z^2",
        binary: &[],
        nonzero: &["b20", "b20^2-20", "b20^2-4"],
        prohibited: &[],
        not_above: false,
        samples: &["X^5+Y^5+X*Z^4+X^3*Z^2", "X^5+Y^5+X*Z^4-3*X^3*Z^2"],
        degenerations: &[
            ("X^5+Y^5+X*Z^4", Expect::Larger("diag(1,E(20)^4,E(20)^5)", 20)),
            ("X^5+Y^5+X*Z^4+2*X^3*Z^2", Expect::Singular),
            ("X^5+Y^5+X*Z^4-2*X^3*Z^2", Expect::Singular),
            ("X^5+Y^5+X*Z^4+SQRT5*X^3*Z^2", Expect::Fermat(10)),
        ],
    },
    Row {
        id: "D10",
        label: GroupLabel::Dihedral(10),
        generators: &[("sigma", "diag(1,E(5),E(5)^2)"), ("tau", "[Z;Y;X]")],
        family: "X^5+Y^5+Z^5+b31*X^2*Y*Z^2+b43*X*Y^3*Z",
        binary: &[],
        nonzero: &[],
        prohibited: &[&["b31", "b43"]],
        not_above: false,
        samples: &["X^5+Y^5+Z^5+X^2*Y*Z^2", "X^5+Y^5+Z^5+X*Y^3*Z", "X^5+Y^5+Z^5+X^2*Y*Z^2-X*Y^3*Z"],
        degenerations: &[("X^5+Y^5+Z^5", Expect::Larger("[Y;Z;X]", 150))],
    },
    Row {
        id: "C8",
        label: GroupLabel::Cyclic(8),
        generators: &[("sigma", "diag(1,E(8),E(8)^4)")],
        family: "X^5+Y^4*Z+X*Z^4+b20*X^3*Z^2",
        binary: &[],
        nonzero: &["b20", "b20^2-4"],
        prohibited: &[],
        not_above: false,
        samples: &["X^5+Y^4*Z+X*Z^4+X^3*Z^2"],
        degenerations: &[
            ("X^5+Y^4*Z+X*Z^4+2*X^3*Z^2", Expect::Singular),
            ("X^5+Y^4*Z+X*Z^4-2*X^3*Z^2", Expect::Singular),
            ("X^5+Y^4*Z+X*Z^4", Expect::Larger("diag(1,E(16),E(16)^12)", 16)),
        ],
    },
    Row {
        id: "S3",
        label: GroupLabel::Sym3,
        generators: &[("sigma", "diag(1,E(3),E(3)^2)"), ("tau", "[X;Z;Y]")],
        family: "X^5+Y^4*Z+Y*Z^4+b21*X^3*Y*Z+b33*X^2*(Z^3+Y^3)+b42*X*Y^2*Z^2",
        binary: &[],
        nonzero: &[],
        prohibited: &[],
        not_above: true,
        samples: &["X^5+Y^4*Z+Y*Z^4+X^3*Y*Z+X^2*(Z^3+Y^3)+X*Y^2*Z^2", "X^5+Y^4*Z+Y*Z^4-X^2*(Z^3+Y^3)"],
        degenerations: &[("X^5+Y^4*Z+Y*Z^4", Expect::Larger("diag(1,E(15),E(15)^11)", 30))],
    },
    Row {
        id: "C5",
        label: GroupLabel::Cyclic(5),
        generators: &[("sigma", "diag(1,1,E(5))")],
        family: "Z^5",
        binary: &[(0, 5)],
        nonzero: &[],
        prohibited: &[],
        not_above: true,
        samples: &["Z^5+X^5+2*X^4*Y+X*Y^4-Y^5"],
        degenerations: &[
            ("Z^5+X^5+Y^5", Expect::Larger("[Y;Z;X]", 75)),
            ("Z^5+X^5+X*Y^4", Expect::Larger("diag(1,E(4),1)", 20)),
        ],
    },
    Row {
        id: "C4 (non-homology)",
        label: GroupLabel::Cyclic(4),
        generators: &[("sigma", "diag(1,E(4),E(4)^2)")],
        family: "X^5+X*(Z^4+Y^4)+b20*X^3*Z^2+b32*X^2*Y^2*Z+b52*Y^2*Z^3",
        binary: &[],
        nonzero: &["b52"],
        prohibited: &[],
        not_above: true,
        samples: &["X^5+X*(Z^4+Y^4)+X^3*Z^2+X^2*Y^2*Z+Y^2*Z^3"],
        degenerations: &[("X^5+X*(Z^4+Y^4)+X^3*Z^2+X^2*Y^2*Z", Expect::Singular)],
    },
    Row {
        id: "C4 (homology)",
        label: GroupLabel::Cyclic(4),
        generators: &[("sigma", "diag(1,1,E(4))")],
        family: "",
        binary: &[(4, 1), (0, 5)],
        nonzero: &[],
        prohibited: &[],
        not_above: true,
        samples: &["Z^4*Y+X^5+X^4*Y+2*X*Y^4-Y^5"],
        degenerations: &[("Z^4*Y+X^5+X*Y^4", Expect::Larger("diag(1,E(16)^4,E(16)^15)", 16))],
    },
    Row {
        id: "C3",
        label: GroupLabel::Cyclic(3),
        generators: &[("sigma", "diag(1,E(3),E(3)^2)")],
        family: "X^5+Y^4*Z+Y*Z^4+b21*X^3*Y*Z+X^2*(b30*Z^3+b33*Y^3)+b42*X*Y^2*Z^2",
        binary: &[],
        nonzero: &["b30-b33"],
        prohibited: &[],
        not_above: true,
        samples: &["X^5+Y^4*Z+Y*Z^4+X^3*Y*Z+X^2*Z^3+2*X^2*Y^3"],
        degenerations: &[("X^5+Y^4*Z+Y*Z^4+X^3*Y*Z+X^2*(Z^3+Y^3)+X*Y^2*Z^2", Expect::Larger("[X;Z;Y]", 6))],
    },
    Row {
        id: "C2",
        label: GroupLabel::Cyclic(2),
        generators: &[("sigma", "diag(1,1,-1)")],
        family: "",
        binary: &[(4, 1), (2, 3), (0, 5)],
        nonzero: &[],
        prohibited: &[],
        not_above: true,
        samples: &["Z^4*(X+Y)+Z^2*(X^3-X*Y^2+Y^3)+X^5+2*X^3*Y^2-X*Y^4+Y^5"],
        degenerations: &[("X^5+Y^5+X*Z^4", Expect::Larger("diag(1,E(20)^4,E(20)^5)", 20))],
    },
];

fn build_family(row: &Row) -> HomPoly {
    let mut f = if row.family.is_empty() {
        HomPoly::zero(DEGREE)
    } else {
        HomPoly::parse(row.family).expect("catalog families parse")
    };
    for &(k, e) in row.binary {
        let zk = HomPoly::sum_of_monomials(k, &[Monomial3::pure(2, k)]).expect("pure power");
        let part = zk.mul(&HomPoly::generic(e, Some(2), &format!("l{e}")));
        f = f.add(&part).expect("degrees agree");
    }
    f
}

fn curve(text: &str) -> HomPoly {
    HomPoly::parse(&text.replace("SQRT5", SQRT5_TWICE)).expect("catalog curves parse")
}

fn poly(text: &str) -> ParamPoly {
    parse_param_poly(text).expect("catalog restrictions parse")
}

fn build(row: &Row) -> Stratum {
    let family = build_family(row);
    let member = |text: &str| assignment_for(&family, &curve(text)).expect("catalog curves lie in their family");
    Stratum {
        id: row.id.to_string(),
        label: row.label,
        generators: row
            .generators
            .iter()
            .map(|(n, m)| (n.to_string(), ProjMat::parse(m).expect("catalog generators parse")))
            .collect(),
        nonzero: row.nonzero.iter().map(|p| poly(p)).collect(),
        prohibited: row.prohibited.iter().map(|set| set.iter().map(|p| poly(p)).collect()).collect(),
        not_above: row.not_above,
        samples: row.samples.iter().map(|s| member(s)).collect(),
        degenerations: row
            .degenerations
            .iter()
            .map(|(s, e)| Degeneration {
                assignment: member(s),
                expected: match *e {
                    Expect::Singular => Expected::Singular,
                    Expect::Larger(w, order) => {
                        Expected::LargerGroup { witness: ProjMat::parse(w).expect("witness parses"), order }
                    }
                    Expect::Fermat(visible_order) => Expected::FermatEquivalent { visible_order },
                },
            })
            .collect(),
        family,
    }
}

/// The fourteen strata, from the largest group down.
pub fn builtin_strata() -> Vec<Stratum> {
    ROWS.iter().map(build).collect()
}

/// Twice the square root of five, `2 + 4(E(5) + E(5)^4)`.
pub fn two_sqrt5() -> CycNum {
    crate::polyring::parse_constant(SQRT5_TWICE).expect("constant parses")
}

#[cfg(test)]
mod tests;
