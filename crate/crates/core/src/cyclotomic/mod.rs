//! Exact arithmetic in cyclotomic fields `Q(E(N))`.
//!
//! Every [`CycNum`] carries its own conductor `N` and is stored in the power
//! basis `1, E(N), ..., E(N)^(phi(N)-1)` of `Q[x]/Phi_N(x)`. Binary operations
//! on mixed conductors first embed both operands into the lcm of the two
//! conductors. No conductor minimization is performed after arithmetic, so
//! equality always embeds before comparing.

mod field;
mod number;

pub use field::{cyclotomic_polynomial, euler_phi};
pub use number::CycNum;

/// Arbitrary-precision rational; the base field of every cyclotomic field.
pub type Rational = num_rational::BigRational;



/// `E(n)^k` as an element of conductor `n`.
pub fn root_of_unity(n: u32, k: i64) -> CycNum {
    CycNum::root_of_unity(n, k)
}

#[cfg(test)]
mod tests;
