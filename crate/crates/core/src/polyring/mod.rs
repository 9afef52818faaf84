//! Homogeneous ternary forms over cyclotomic fields with symbolic parameters.
//!
//! Coefficients are [`ParamPoly`]s: polynomials in named parameters with
//! [`CycNum`](crate::CycNum) coefficients. A [`HomPoly`] maps each degree-`d`
//! monomial in `X, Y, Z` to such a coefficient. The text syntax is read by
//! [`HomPoly::parse`] and written back by `Display`.

mod hompoly;
mod monomial;
mod param;
mod parse;


mod resultant;

pub use hompoly::HomPoly;
pub use monomial::Monomial3;
pub use param::{Assignment, ParamPoly, PowerProduct};
pub use parse::{parse_constant, parse_param_poly};
pub(crate) use parse::parse_hompoly_at as parse_linear_at;
pub use resultant::{resultant, resultant_coeffs};

#[cfg(test)]
pub(crate) mod tests;
