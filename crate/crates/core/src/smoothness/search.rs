use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{common_variable_factor, forced_singular_at_coordinate_points, smoothness_certificate};
use super::SmoothnessCertificate;
use crate::cyclotomic::CycNum;
use crate::polyring::{HomPoly, Monomial3};

/// A smooth curve found by [`find_smooth_member`]: one pool value per basis
/// monomial, the curve they define, and its certificate.
#[derive(Clone, Debug)]
pub struct SmoothWitness {
    pub coeffs: Vec<CycNum>,
    pub curve: HomPoly,
    pub certificate: SmoothnessCertificate,
    /// Candidates examined, including the successful one.
    pub attempts: u64,
}

/// Exhaustive seeded search; see [`find_smooth_member_within`].
pub fn find_smooth_member(basis: &[Monomial3], pool: &[CycNum], seed: u64) -> Option<SmoothWitness> {
    find_smooth_member_within(basis, pool, seed, None)
}

/// Walks the `|pool|^n` coefficient tuples in the order `t ↦ (a·t + b) mod
/// |pool|^n`, where `a` (a unit) and `b` come from a ChaCha stream seeded by
/// `seed`, decoding each index into lexicographic digits (first monomial most
/// significant). Candidates whose support already forces a singular
/// coordinate point or a common variable factor are skipped without a
/// Groebner computation. Returns the first smooth one, or `None` after
/// `max_attempts` candidates or the whole space.
pub fn find_smooth_member_within(
    basis: &[Monomial3],
    pool: &[CycNum],
    seed: u64,
    max_attempts: Option<u64>,
) -> Option<SmoothWitness> {
    if basis.is_empty() || pool.is_empty() {
        return None;
    }
    let d = basis[0].degree();
    if basis.iter().any(|m| m.degree() != d) {
        return None;
    }
    let base = BigUint::from(pool.len());
    let size = num_traits::pow(base.clone(), basis.len());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a;
    loop {
        a = BigUint::from(rng.gen::<u128>()) % &size;
        if a.gcd(&size).is_one() {
            break;
        }
    }
    let b = BigUint::from(rng.gen::<u128>()) % &size;
    let limit = match max_attempts {
        Some(m) => BigUint::from(m).min(size.clone()),
        None => size.clone(),
    };
    let mut t = BigUint::zero();
    let mut attempts = 0u64;
    while t < limit {
        attempts += 1;
        let mut idx = (&a * &t + &b) % &size;
        t += 1u32;
        let mut digits = vec![0usize; basis.len()];
        for slot in digits.iter_mut().rev() {
            *slot = (&idx % &base).to_usize().unwrap();
            idx /= &base;
        }
        let coeffs: Vec<CycNum> = digits.iter().map(|&i| pool[i].clone()).collect();
        let support = basis
            .iter()
            .zip(&coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, _)| *m)
            .collect();
        if common_variable_factor(&support).is_some()
            || !forced_singular_at_coordinate_points(&support, d).is_empty()
        {
            continue;
        }
        let curve = HomPoly::from_numeric(d, basis.iter().copied().zip(coeffs.iter().cloned()))
            .expect("basis shares a degree");
        if curve.is_zero() {
            continue;
        }
        let certificate = smoothness_certificate(&curve).ok()?;
        if certificate.smooth {
            return Some(SmoothWitness { coeffs, curve, certificate, attempts });
        }
    }
    None
}
