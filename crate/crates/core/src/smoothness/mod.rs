//! Projective smoothness certificates for numeric plane curves.
//!
//! A curve `F = 0` is smooth iff its Jacobian ideal `(F_X, F_Y, F_Z)` has no
//! projective zero, which holds iff a Groebner basis (grevlex, `X > Y > Z`)
//! has a pure power of each variable among its leading terms.
//!
//! [`is_smooth`] first tries the same test over a prime field
//! `F_p ⊃ Q(E(N))`-image; a positive answer there already proves smoothness
//! in characteristic zero. Only when reduction is inconclusive does it fall
//! back to exact completion over the cyclotomic field.

mod groebner;
mod modp;
mod search;

use std::collections::BTreeSet;

use serde::Serialize;

pub use search::{find_smooth_member, find_smooth_member_within, SmoothWitness};

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::polyring::{HomPoly, Monomial3};
use groebner::{buchberger, is_groebner, pure_powers_present, sort_poly, Coeff, Poly};

impl Coeff for CycNum {
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
    fn add(&self, o: &CycNum) -> CycNum {
        self + o
    }
    fn sub(&self, o: &CycNum) -> CycNum {
        self - o
    }
    fn mul(&self, o: &CycNum) -> CycNum {
        self * o
    }
    fn neg(&self) -> CycNum {
        -self
    }
    fn inv(&self) -> CycNum {
        CycNum::inv(self).expect("leading coefficients are nonzero")
    }
}

/// Monomial order tag of an [`IdealBasis`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `X > Y > Z`.
    Grevlex,
}

/// Reduced, monic Groebner basis of a homogeneous ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    pub gens: Vec<HomPoly>,
    pub order: MonomialOrder,
}

impl IdealBasis {
    /// Leading monomials in increasing grevlex order.
    pub fn leading_terms(&self) -> Vec<Monomial3> {
        self.gens.iter().map(|g| lead(g)).collect()
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let polys: Vec<Poly<CycNum>> = self.gens.iter().map(to_poly).collect();
        is_groebner(&polys)
    }

    /// Whether the leading terms include a pure power of each variable.
    pub fn is_projectively_empty(&self) -> bool {
        let polys: Vec<Poly<CycNum>> = self.gens.iter().map(to_poly).collect();
        pure_powers_present(&polys)
    }
}

fn lead(g: &HomPoly) -> Monomial3 {
    to_poly(g)[0].0
}

fn to_poly(f: &HomPoly) -> Poly<CycNum> {
    let n = f.conductor();
    let terms = f.numeric_terms().expect("numeric polynomial");
    sort_poly(terms.into_iter().map(|(m, c)| (m, c.embed(n).unwrap())).collect())
}

fn common_conductor(gens: &[HomPoly]) -> u32 {
    gens.iter().fold(1u32, |l, g| num_integer::lcm(l, g.conductor()))
}

fn to_polys(gens: &[HomPoly]) -> Result<(u32, Vec<Poly<CycNum>>)> {
    let n = common_conductor(gens);
    let mut out = Vec::new();
    for g in gens {
        let terms = g.numeric_terms().ok_or(Error::NotNumeric)?;
        out.push(sort_poly(terms.into_iter().map(|(m, c)| (m, c.embed(n).unwrap())).collect()));
    }
    Ok((n, out))
}

fn from_poly(p: &Poly<CycNum>) -> HomPoly {
    let d = p[0].0.degree();
    HomPoly::from_numeric(d, p.iter().cloned()).expect("homogeneous basis element")
}

/// Reduced Groebner basis of numeric homogeneous generators.
pub fn groebner_basis(gens: &[HomPoly]) -> Result<IdealBasis> {
    let (_, polys) = to_polys(gens)?;
    let basis = buchberger(polys);
    Ok(IdealBasis { gens: basis.iter().map(from_poly).collect(), order: MonomialOrder::Grevlex })
}

/// Whether the generators have no common zero in the projective plane.
pub fn is_projectively_empty(gens: &[HomPoly]) -> Result<bool> {
    Ok(groebner_basis(gens)?.is_projectively_empty())
}

/// How a smoothness verdict was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// Exact completion over the cyclotomic field.
    Exact,
    /// Completion over `F_p`, where emptiness lifts to characteristic zero.
    Modular { prime: u64 },
}

/// Outcome of a smoothness test with the leading terms of the basis that
/// decided it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessCertificate {
    pub smooth: bool,
    pub kind: CertificateKind,
    pub leading_terms: Vec<Monomial3>,
}

fn jacobian(f: &HomPoly) -> Result<Vec<HomPoly>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_numeric() {
        return Err(Error::NotNumeric);
    }
    if f.degree() == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    Ok(f.partials().into_iter().filter(|g| !g.is_zero()).collect())
}

/// Modular attempt; `Some` only when emptiness is proved.
fn modular_certificate(gens: &[HomPoly], tries: usize) -> Option<SmoothnessCertificate> {
    let (n, polys) = to_polys(gens).ok()?;
    for skip in 0..tries {
        let red = modp::Reduction::new(n, 1, skip);
        let mut mapped = Vec::new();
        for p in &polys {
            let terms: Option<Vec<_>> = p.iter().map(|(m, c)| Some((*m, red.map(c, n)?))).collect();
            mapped.push(sort_poly(terms?));
        }
        let basis = buchberger(mapped);
        if pure_powers_present(&basis) {
            return Some(SmoothnessCertificate {
                smooth: true,
                kind: CertificateKind::Modular { prime: red.prime() },
                leading_terms: basis.iter().map(|g| g[0].0).collect(),
            });
        }
    }
    None
}

/// Smoothness verdict with its certificate.
pub fn smoothness_certificate(f: &HomPoly) -> Result<SmoothnessCertificate> {
    let jac = jacobian(f)?;
    if let Some(c) = modular_certificate(&jac, 2) {
        return Ok(c);
    }
    exact_certificate(f)
}

/// Smoothness verdict by exact completion only.
pub fn exact_certificate(f: &HomPoly) -> Result<SmoothnessCertificate> {
    let basis = groebner_basis(&jacobian(f)?)?;
    Ok(SmoothnessCertificate {
        smooth: basis.is_projectively_empty(),
        kind: CertificateKind::Exact,
        leading_terms: basis.leading_terms(),
    })
}

/// Whether `F = 0` is a smooth projective plane curve.
pub fn is_smooth(f: &HomPoly) -> Result<bool> {
    Ok(smoothness_certificate(f)?.smooth)
}

/// Coordinate points of the projective plane.
pub const COORDINATE_POINTS: [[u32; 3]; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

/// Coordinate points where every curve with this support is singular: the
/// point `e_v` is forced unless the support meets `{x_v^d, x_v^(d-1) x_w}`.
pub fn forced_singular_at_coordinate_points(support: &BTreeSet<Monomial3>, d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for v in 0..3 {
        let near = (0..3).any(|w| {
            let mut e = [0u32; 3];
            e[v] = d.saturating_sub(1);
            e[w] += 1;
            support.contains(&Monomial3(e))
        });
        if !near {
            out.push(COORDINATE_POINTS[v]);
        }
    }
    out
}

/// A variable dividing every monomial of the support, if any.
pub fn common_variable_factor(support: &BTreeSet<Monomial3>) -> Option<usize> {
    if support.is_empty() {
        return None;
    }
    (0..3).find(|&v| support.iter().all(|m| m.0[v] > 0))
}
