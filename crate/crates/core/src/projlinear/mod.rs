//! Projective 3x3 matrices over cyclotomic fields and finite subgroups of
//! `PGL_3`.
//!
//! A [`ProjMat`] is kept in normal form (first nonzero entry in row-major
//! order equal to one), so projective equality is entrywise equality.
//! Acting on a form, `F.substitute_linear(M)` is `F(M·(X, Y, Z)^T)`; the
//! bracket notation `[Y; Z; X]` lists the images of `X`, `Y`, `Z`.

mod group;
mod mat;
mod monomial;
mod stabilizer;

pub use group::{closure, closure_named, element_order, FinGroup, DEFAULT_CAP};
pub use mat::ProjMat;
pub use monomial::{diagonalize_monomial, MonomialMat};
pub use stabilizer::monomial_stabilizer;
