//! Exact computer algebra for automorphism groups of smooth plane curves.
//!
//! The crate is organised bottom-up:
//!
//! * [`cyclotomic`]: exact arithmetic in cyclotomic fields.
//! * [`polyring`]: homogeneous ternary forms with symbolic parameters, the
//!   expression language, and resultants.
//! * [`smoothness`]: Gröbner bases and projective smoothness certificates.
//! * [`projlinear`]: projective 3x3 matrices, finite group closure and
//!   monomial stabilizers.
//! * [`groupid`]: fingerprints and isomorphism tests for small matrix groups.
//! * [`typeclassifier`]: cyclic types `m,(a,b)`, eigenclasses and smooth-type
//!   enumeration.
//! * [`catalog`]: the built-in table of quintic automorphism strata and the
//!   verification harness.

pub mod catalog;
pub mod cyclotomic;
mod error;
pub mod groupid;
pub mod polyring;
pub mod projlinear;
pub mod smoothness;
pub mod typeclassifier;

pub use catalog::{
    builtin_strata, classify_curve, verify_all, verify_stratum, Classification, Stratum, Verdict, VerificationReport,
};
pub use cyclotomic::{CycNum, Rational};
pub use error::{Error, Result};
pub use groupid::{identify, GroupLabel};
pub use polyring::{HomPoly, Monomial3, ParamPoly};
pub use projlinear::{closure, monomial_stabilizer, FinGroup, ProjMat};
pub use smoothness::{is_smooth, smoothness_certificate, SmoothnessCertificate};
pub use typeclassifier::{canonical_type, enumerate_smooth_types, type_of, CyclicType, TypeFamily};
