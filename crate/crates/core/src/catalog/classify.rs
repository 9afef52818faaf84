use std::collections::BTreeMap;

use serde::Serialize;

use super::{builtin_strata, DEGREE};
use crate::error::{Error, Result};
use crate::groupid::{identify, GroupLabel};
use crate::polyring::{HomPoly, Monomial3};
use crate::projlinear::{monomial_stabilizer, ProjMat, DEFAULT_CAP};
use crate::smoothness::{smoothness_certificate, CertificateKind};
use crate::typeclassifier::{full_conductor, type_of};

/// Outcome of [`classify_curve`].
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub curve: String,
    pub smooth: bool,
    /// Why the remaining fields are empty.
    pub reason: Option<String>,
    pub certificate: Option<CertificateKind>,
    pub conductor: u32,
    pub stabilizer_order: Option<usize>,
    pub label: Option<GroupLabel>,
    pub generators: Vec<ProjMat>,
    pub max_element_order: Option<usize>,
    /// Cyclic type of each element, with multiplicities.
    pub element_types: BTreeMap<String, usize>,
    /// Strata whose family has a support containing the curve's support.
    pub family_matches: Vec<String>,
    /// The family match whose group is the one found, if any.
    pub stratum: Option<String>,
    pub core: Option<String>,
    pub core_is_fermat: bool,
    pub core_is_klein: bool,
}

fn pure_sum(d: u32, exps: &[[u32; 3]]) -> HomPoly {
    let monos: Vec<Monomial3> = exps.iter().map(|&e| Monomial3(e)).collect();
    HomPoly::sum_of_monomials(d, &monos).expect("monomials share the degree")
}

/// `X^d + Y^d + Z^d`.
pub fn fermat(d: u32) -> HomPoly {
    pure_sum(d, &[[d, 0, 0], [0, d, 0], [0, 0, d]])
}

/// The two mirror forms `X^(d-1)Y + Y^(d-1)Z + Z^(d-1)X` and
/// `XY^(d-1) + YZ^(d-1) + ZX^(d-1)`.
pub fn klein_forms(d: u32) -> [HomPoly; 2] {
    let e = d - 1;
    [pure_sum(d, &[[e, 1, 0], [0, e, 1], [1, 0, e]]), pure_sum(d, &[[1, e, 0], [0, 1, e], [e, 0, 1]])]
}

/// Classifies a numeric form, by default at the full conductor for its
/// degree. Singular or reducible curves are reported, not raised.
pub fn classify_curve(f: &HomPoly) -> Result<Classification> {
    let n = full_conductor(f.degree().max(4))?;
    classify_curve_at(f, n, DEFAULT_CAP)
}

/// [`classify_curve`] with an explicit stabilizer conductor and group cap.
pub fn classify_curve_at(f: &HomPoly, conductor: u32, cap: usize) -> Result<Classification> {
    if !f.is_numeric() {
        return Err(Error::NotNumeric);
    }
    let d = f.degree();
    let mut out = Classification {
        curve: f.to_string(),
        smooth: false,
        reason: None,
        certificate: None,
        conductor,
        stabilizer_order: None,
        label: None,
        generators: Vec::new(),
        max_element_order: None,
        element_types: BTreeMap::new(),
        family_matches: Vec::new(),
        stratum: None,
        core: None,
        core_is_fermat: false,
        core_is_klein: false,
    };
    let cert = smoothness_certificate(f)?;
    out.certificate = Some(cert.kind);
    if !cert.smooth {
        out.reason = Some("singular or reducible".into());
        return Ok(out);
    }
    out.smooth = true;
    let g = monomial_stabilizer(f, conductor, cap)?;
    let label = identify(&g);
    out.stabilizer_order = Some(g.order());
    out.label = Some(label);
    out.generators = g.generators().to_vec();
    out.max_element_order = g.element_orders().into_iter().max();
    for e in g.elements() {
        *out.element_types.entry(type_of(e)?.to_string()).or_default() += 1;
    }
    if d == DEGREE {
        let support = f.support();
        for s in builtin_strata() {
            if support.is_subset(&s.family.support()) {
                if s.label == label && out.stratum.is_none() {
                    out.stratum = Some(s.id.clone());
                }
                out.family_matches.push(s.id);
            }
        }
    }
    let core = f.core()?;
    out.core_is_fermat = fermat(d).proportionality(&core).is_some();
    out.core_is_klein = klein_forms(d).iter().any(|k| k.proportionality(&core).is_some());
    out.core = Some(core.to_string());
    Ok(out)
}
