use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::criterion::hilbert_dimension;
use super::spectrum::lelong_spectrum;
use crate::domain::{ElementaryDomainSpec, ProjectivePoint};
use crate::error::{Error, Result};

fn below(spec: &ElementaryDomainSpec, num: i64, den: i64) -> bool {
    let bound = BigRational::new(BigInt::from(num), BigInt::from(den));
    lelong_spectrum(spec).iter().all(|(_, nu)| *nu < bound)
}

/// `K_D(0) > 0`, equivalently finite volume: every Lelong number is below 1/2.
pub fn kernel_positive(spec: &ElementaryDomainSpec) -> bool {
    below(spec, 1, 2)
}

/// Existence of the Bergman metric: every Lelong number is below 1/3.
pub fn admits_bergman_metric(spec: &ElementaryDomainSpec) -> bool {
    below(spec, 1, 3)
}

/// Whether `L²_h(D)` contains every polynomial, with a violating point when
/// it does not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AllPolynomialsVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<ProjectivePoint>,
}

/// Requires every Lelong number to vanish, which an elementary spec never
/// satisfies (its spectrum sums to 1); the witness is the first point with
/// positive Lelong number.
pub fn contains_all_polynomials(spec: &ElementaryDomainSpec) -> AllPolynomialsVerdict {
    let witness = lelong_spectrum(spec)
        .iter()
        .find(|(_, nu)| !nu.is_zero())
        .map(|(p, _)| p.clone());
    AllPolynomialsVerdict {
        holds: witness.is_none(),
        witness,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BergmanKind {
    Trivial,
    InfiniteDimensional,
}

/// Dichotomy outcome for `L²_h(D)`. `witness_degree` is the smallest degree
/// carrying a nonzero square-integrable form, present only when the space is
/// infinite dimensional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergmanClassification {
    pub kind: BergmanKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_degree: Option<u32>,
}

/// Degree bound for the witness search: `3·lcm(denominators) + 6`.
pub fn witness_search_bound(spec: &ElementaryDomainSpec) -> u32 {
    let lcm = spec.weight_lcm().min(u64::from(u32::MAX / 4)) as u32;
    3 * lcm + 6
}

/// `L²_h(D) = {0}` exactly for `h = |Az|` and `h = |Az|^t |Bz|^{1−t}`, i.e.
/// when the spectrum has at most two points; otherwise the space is infinite
/// dimensional and the first nonempty degree is located.
pub fn classify_bergman_space(spec: &ElementaryDomainSpec) -> Result<BergmanClassification> {
    let support = lelong_spectrum(spec).len();
    if support <= 2 {
        return Ok(BergmanClassification {
            kind: BergmanKind::Trivial,
            witness_degree: None,
        });
    }
    let bound = witness_search_bound(spec);
    (0..=bound)
        .find(|&d| hilbert_dimension(spec, d) > 0)
        .map(|d| BergmanClassification {
            kind: BergmanKind::InfiniteDimensional,
            witness_degree: Some(d),
        })
        .ok_or(Error::WitnessSearchExhausted { bound, support })
}
