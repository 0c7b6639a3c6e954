use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::gaussian::rational_string;
use super::{GaussianRational, LinearForm, WeightedFactor};
use crate::error::{Error, Result};

/// An elementary balanced domain `D_h = {h < 1}` with
/// `h(z) = Π |A_j z|^{t_j}`, `Σ t_j = 1`.
///
/// Factors are canonical: forms are normalized, pairwise non-proportional,
/// and sorted. Normalizing a form rescales `h` by a positive constant, so a
/// spec determines its domain up to a dilation.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ElementaryDomainSpec {
    factors: Vec<WeightedFactor>,
}

/// One factor as written by a user: arbitrary nonzero form, positive weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawFactor {
    pub form: [GaussianRational; 2],
    #[serde(with = "rational_string")]
    pub weight: BigRational,
}

impl RawFactor {
    pub fn new(a: GaussianRational, b: GaussianRational, weight: BigRational) -> Self {
        Self {
            form: [a, b],
            weight,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SpecFile {
    factors: Vec<RawFactor>,
}

/// Validates raw factors and merges proportional forms into one canonical spec.
pub fn canonicalize_spec(raw: impl IntoIterator<Item = RawFactor>) -> Result<ElementaryDomainSpec> {
    let mut merged: BTreeMap<LinearForm, BigRational> = BTreeMap::new();
    let mut total = BigRational::zero();
    for RawFactor { form: [a, b], weight } in raw {
        if !weight.is_positive() {
            return Err(Error::NonPositiveWeight(weight));
        }
        let form = LinearForm::new(a, b)?;
        total += &weight;
        *merged.entry(form).or_insert_with(BigRational::zero) += weight;
    }
    if merged.is_empty() {
        return Err(Error::EmptySpec);
    }
    if !total.is_one() {
        return Err(Error::WeightSum(total));
    }
    let factors = merged
        .into_iter()
        .map(|(form, weight)| WeightedFactor { form, weight })
        .collect();
    Ok(ElementaryDomainSpec { factors })
}

impl ElementaryDomainSpec {
    /// Builds a spec from already-normalized factors, merging and sorting.
    pub fn from_factors(factors: impl IntoIterator<Item = WeightedFactor>) -> Result<Self> {
        canonicalize_spec(factors.into_iter().map(|f| RawFactor {
            form: [f.form.a().clone(), f.form.b().clone()],
            weight: f.weight,
        }))
    }

    pub fn factors(&self) -> &[WeightedFactor] {
        &self.factors
    }

    pub fn to_raw(&self) -> Vec<RawFactor> {
        self.factors
            .iter()
            .map(|f| RawFactor::new(f.form.a().clone(), f.form.b().clone(), f.weight.clone()))
            .collect()
    }

    /// Least common multiple of the weight denominators.
    pub fn weight_lcm(&self) -> u64 {
        self.factors.iter().fold(1u64, |acc, f| {
            let d = f.weight.denom().to_u64().unwrap_or(u64::MAX);
            num_integer::lcm(acc, d)
        })
    }

    pub fn evaluate_h(&self, z: [Complex64; 2]) -> f64 {
        evaluate_h(self, z)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SpecFile = serde_json::from_str(text)?;
        canonicalize_spec(file.factors)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SpecFile {
            factors: self.to_raw(),
        })
        .expect("spec serializes")
    }
}

/// `h(z) = Π |A_j z|^{t_j}`; zero whenever a factor vanishes.
pub fn evaluate_h(spec: &ElementaryDomainSpec, z: [Complex64; 2]) -> f64 {
    let mut log_h = 0.0;
    for f in &spec.factors {
        let m = f.form.eval(z).norm();
        if m == 0.0 {
            return 0.0;
        }
        log_h += f.weight.to_f64().unwrap_or(f64::NAN) * m.ln();
    }
    log_h.exp()
}

impl<'de> Deserialize<'de> for ElementaryDomainSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = SpecFile::deserialize(d)?;
        canonicalize_spec(file.factors).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for ElementaryDomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h = ")?;
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " · ")?;
            }
            write!(f, "|{}|^{}", factor.form, factor.weight)?;
        }
        Ok(())
    }
}

impl fmt::Debug for ElementaryDomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Convenience constructor: `h = Π |z₁ − c_j z₂|^{t_j}` with an optional
/// `|z₂|^{t}` factor, from `(c_j, t_j)` pairs where `None` stands for `z₂`.
pub fn spec_from_points(points: &[(Option<GaussianRational>, BigRational)]) -> Result<ElementaryDomainSpec> {
    canonicalize_spec(points.iter().map(|(c, t)| match c {
        Some(c) => RawFactor::new(GaussianRational::one(), -c, t.clone()),
        None => RawFactor::new(GaussianRational::zero(), GaussianRational::one(), t.clone()),
    }))
}
