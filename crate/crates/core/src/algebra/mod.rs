//! Exact Lelong-number calculus and the algebraic decisions built on it.

mod criterion;
mod decide;
mod siciak;
mod spectrum;

pub use criterion::{
    criterion_margin, hilbert_dimension, is_square_integrable, multiplicity, required_multiplicities,
    required_multiplicity, square_integrable_basis, vanishing_factor,
};
pub use decide::{
    admits_bergman_metric, classify_bergman_space, contains_all_polynomials, kernel_positive,
    witness_search_bound, AllPolynomialsVerdict, BergmanClassification, BergmanKind,
};
pub use siciak::{
    siciak_approximant, siciak_blend, GaussianRationalEnumeration, SiciakBlend, SiciakRegime,
    WeightSchedule,
};
pub use spectrum::{blend, lelong_at, lelong_spectrum, LelongSpectrum, SpectrumEntry};
