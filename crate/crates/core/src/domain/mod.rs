//! Exact data model: Gaussian rationals, linear forms, projective points,
//! binary forms and elementary domain specs.

mod form;
pub(crate) mod gaussian;
mod point;
pub(crate) mod poly;
mod spec;

pub use form::{zero_point, LinearForm, WeightedFactor};
pub use gaussian::{rational_string, GaussianRational};
pub use point::ProjectivePoint;
pub use poly::HomogeneousPolynomial;
pub use spec::{canonicalize_spec, evaluate_h, spec_from_points, ElementaryDomainSpec, RawFactor};
