use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Precomputed data for the field `Q(E(n))`.
pub(crate) struct FieldData {
    pub phi: usize,
    /// Monic `Phi_n`, ascending coefficients, length `phi + 1`.
    pub modulus: Vec<BigInt>,
    /// `E(n)^k` reduced to the power basis, for `k` in `0..n`.
    pub powers: Vec<Vec<BigInt>>,
    /// Power-basis vectors of the roots of unity in the field, mapped to
    /// `(negated, j)` meaning `-E(n)^j` or `E(n)^j`.
    pub roots: HashMap<Vec<BigInt>, (bool, u32)>,
    /// Order of the group of roots of unity in `Q(E(n))`: `lcm(2, n)`.
    pub root_order: u32,
}

fn poly_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn field_cache() -> &'static RwLock<HashMap<u32, Arc<FieldData>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// Exact quotient of `num` by the monic polynomial `den` (ascending order).
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut quo = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quo[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quo
}

/// The `n`-th cyclotomic polynomial `Phi_n` as ascending integer coefficients.
///
/// Computed as `x^n - 1` divided by `Phi_d` for every proper divisor `d` of `n`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n > 0, "cyclotomic_polynomial: n must be positive");
    cyclotomic_arc(n).as_ref().clone()
}

fn cyclotomic_arc(n: u32) -> Arc<Vec<BigInt>> {
    if let Some(p) = poly_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            p = exact_div_monic(&p, &cyclotomic_arc(d));
        }
    }
    let p = Arc::new(p);
    poly_cache().write().unwrap().insert(n, p.clone());
    p
}

/// Reduces an ascending coefficient vector modulo the monic `modulus`,
/// returning exactly `phi` coefficients.
pub(crate) fn reduce_mod(mut v: Vec<BigInt>, modulus: &[BigInt]) -> Vec<BigInt> {
    let phi = modulus.len() - 1;
    if v.len() > phi {
        for k in (phi..v.len()).rev() {
            if v[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[k]);
            for j in 0..phi {
                v[k - phi + j] -= &c * &modulus[j];
            }
        }
    }
    v.resize(phi, BigInt::zero());
    v
}

pub(crate) fn field_data(n: u32) -> Arc<FieldData> {
    if let Some(f) = field_cache().read().unwrap().get(&n) {
        return f.clone();
    }
    let modulus = cyclotomic_arc(n).as_ref().clone();
    let phi = modulus.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![BigInt::zero(); phi];
    cur[0] = BigInt::one();
    if phi == 1 {
        // Q itself: E(1) = 1 and E(2) = -1.
        cur = vec![BigInt::one()];
    }
    for _ in 0..n {
        powers.push(cur.clone());
        let mut next = vec![BigInt::zero(); phi + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] = c.clone();
        }
        cur = reduce_mod(next, &modulus);
    }
    let root_order = if n % 2 == 0 { n } else { 2 * n };
    let mut roots = HashMap::new();
    for (j, p) in powers.iter().enumerate() {
        let j = j as u32;
        let neg: Vec<BigInt> = p.iter().map(|c| -c).collect();
        roots.entry(p.clone()).or_insert((false, j));
        if n % 2 == 1 {
            roots.entry(neg).or_insert((true, j));
        }
    }
    let data = Arc::new(FieldData {
        phi,
        modulus,
        powers,
        roots,
        root_order,
    });
    field_cache().write().unwrap().insert(n, data.clone());
    data
}
