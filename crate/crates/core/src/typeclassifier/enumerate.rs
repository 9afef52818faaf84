use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::{admissible_orders, canonical_types_of_order, eigenclasses, CyclicType, PERMS};
use crate::cyclotomic::CycNum;
use crate::error::Result;
use crate::polyring::Monomial3;
use crate::smoothness::{
    common_variable_factor, find_smooth_member_within, forced_singular_at_coordinate_points, SmoothWitness,
};

/// What is known about the curves spanned by one eigenclass.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FamilyStatus {
    /// A smooth member was found and certified.
    Smooth,
    /// Every member is singular at these coordinate points.
    ForcedSingular { points: Vec<[u32; 3]> },
    /// Every member is divisible by this variable (0 = X, 1 = Y, 2 = Z).
    CommonFactor { variable: usize },
    /// The search exhausted its pool or budget; this is not a proof.
    NoWitness,
}

impl FamilyStatus {
    /// Whether the status proves the family has no smooth member.
    pub fn is_proof_of_exclusion(&self) -> bool {
        matches!(self, FamilyStatus::ForcedSingular { .. } | FamilyStatus::CommonFactor { .. })
    }
}

/// One eigenclass of one canonical type, with its search outcome.
#[derive(Clone, Debug)]
pub struct TypeFamily {
    pub ty: CyclicType,
    pub degree: u32,
    pub class: u32,
    pub basis: Vec<Monomial3>,
    pub status: FamilyStatus,
    pub smooth_witness: Option<SmoothWitness>,
}

impl TypeFamily {
    pub fn is_smooth(&self) -> bool {
        self.status == FamilyStatus::Smooth
    }
}

#[derive(Serialize)]
struct WitnessOut<'a> {
    curve: String,
    coefficients: Vec<String>,
    certificate: &'a crate::smoothness::SmoothnessCertificate,
    attempts: u64,
}

#[derive(Serialize)]
struct FamilyOut<'a> {
    #[serde(rename = "type")]
    ty: &'a CyclicType,
    degree: u32,
    class: u32,
    basis: &'a [Monomial3],
    #[serde(flatten)]
    status: &'a FamilyStatus,
    witness: Option<WitnessOut<'a>>,
}

impl Serialize for TypeFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyOut {
            ty: &self.ty,
            degree: self.degree,
            class: self.class,
            basis: &self.basis,
            status: &self.status,
            witness: self.smooth_witness.as_ref().map(|w| WitnessOut {
                curve: w.curve.to_string(),
                coefficients: w.coeffs.iter().map(|c| c.to_string()).collect(),
                certificate: &w.certificate,
                attempts: w.attempts,
            }),
        }
        .serialize(s)
    }
}

/// Coefficient pool `{0, 1, -1, 2, E(3)}`.
pub fn default_pool() -> Vec<CycNum> {
    vec![CycNum::zero(), CycNum::one(), CycNum::from_int(-1), CycNum::from_int(2), CycNum::root_of_unity(3, 1)]
}

fn permute(m: &Monomial3, p: &[usize; 3]) -> Monomial3 {
    Monomial3([m.0[p[0]], m.0[p[1]], m.0[p[2]]])
}

/// Classes of one type, keeping the least class of each set of classes whose
/// bases are exchanged by a coordinate permutation.
fn distinct_classes(d: u32, t: &CyclicType) -> Vec<(u32, Vec<Monomial3>)> {
    let classes: Vec<(u32, Vec<Monomial3>)> = eigenclasses(d, t).into_iter().collect();
    let sets: Vec<BTreeSet<Monomial3>> = classes.iter().map(|(_, b)| b.iter().copied().collect()).collect();
    let mut kept: Vec<usize> = Vec::new();
    for i in 0..classes.len() {
        let dup = kept.iter().any(|&k| {
            PERMS.iter().any(|p| {
                sets[i].len() == sets[k].len() && sets[i].iter().all(|m| sets[k].contains(&permute(m, p)))
            })
        });
        if !dup {
            kept.push(i);
        }
    }
    kept.into_iter().map(|i| classes[i].clone()).collect()
}

fn classify_cell(
    t: CyclicType,
    d: u32,
    class: u32,
    basis: Vec<Monomial3>,
    pool: &[CycNum],
    seed: u64,
    budget: Option<u64>,
) -> TypeFamily {
    let support: BTreeSet<Monomial3> = basis.iter().copied().collect();
    let forced = forced_singular_at_coordinate_points(&support, d);
    let (status, witness) = if !forced.is_empty() {
        (FamilyStatus::ForcedSingular { points: forced }, None)
    } else if let Some(v) = common_variable_factor(&support) {
        (FamilyStatus::CommonFactor { variable: v }, None)
    } else {
        match find_smooth_member_within(&basis, pool, seed, budget) {
            Some(w) => (FamilyStatus::Smooth, Some(w)),
            None => (FamilyStatus::NoWitness, None),
        }
    };
    TypeFamily { ty: t, degree: d, class, basis, status, smooth_witness: witness }
}

/// Every nonempty eigenclass of every nontrivial canonical type of
/// admissible order, up to coordinate permutations, with its status. Sorted
/// by `(m, a, b, class)`.
pub fn enumerate_types_within(d: u32, pool: &[CycNum], seed: u64, budget: Option<u64>) -> Result<Vec<TypeFamily>> {
    let mut cells = Vec::new();
    for m in admissible_orders(d)?.into_iter().filter(|&m| m > 1) {
        for t in canonical_types_of_order(m) {
            for (c, basis) in distinct_classes(d, &t) {
                cells.push((t, c, basis));
            }
        }
    }
    let mut out: Vec<TypeFamily> = cells
        .into_par_iter()
        .map(|(t, c, basis)| classify_cell(t, d, c, basis, pool, seed, budget))
        .collect();
    out.sort_by_key(|f| (f.ty, f.class));
    Ok(out)
}

/// [`enumerate_types_within`] without an attempt budget.
pub fn enumerate_types(d: u32, pool: &[CycNum], seed: u64) -> Result<Vec<TypeFamily>> {
    enumerate_types_within(d, pool, seed, None)
}

/// The families of [`enumerate_types`] that carry a certified smooth member.
pub fn enumerate_smooth_types(d: u32, pool: &[CycNum], seed: u64) -> Result<Vec<TypeFamily>> {
    Ok(enumerate_types(d, pool, seed)?.into_iter().filter(TypeFamily::is_smooth).collect())
}
