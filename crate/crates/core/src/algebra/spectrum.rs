use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::domain::{rational_string, ElementaryDomainSpec, ProjectivePoint, RawFactor};
use crate::error::{Error, Result};

/// Lelong numbers `ν(log h, [v])` of an elementary spec, keyed by the points
/// where they are positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<SpectrumEntry>", from = "Vec<SpectrumEntry>")]
pub struct LelongSpectrum {
    entries: BTreeMap<ProjectivePoint, BigRational>,
}

/// One row of a spectrum table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub point: ProjectivePoint,
    #[serde(with = "rational_string")]
    pub nu: BigRational,
}

impl From<LelongSpectrum> for Vec<SpectrumEntry> {
    fn from(s: LelongSpectrum) -> Self {
        s.entries
            .into_iter()
            .map(|(point, nu)| SpectrumEntry { point, nu })
            .collect()
    }
}

impl From<Vec<SpectrumEntry>> for LelongSpectrum {
    fn from(v: Vec<SpectrumEntry>) -> Self {
        Self {
            entries: v.into_iter().map(|e| (e.point, e.nu)).collect(),
        }
    }
}

impl LelongSpectrum {
    pub fn get(&self, v: &ProjectivePoint) -> BigRational {
        self.entries.get(v).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ProjectivePoint, &BigRational)> {
        self.entries.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ProjectivePoint> {
        self.entries.keys()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> BigRational {
        self.entries.values().fold(BigRational::zero(), |a, b| a + b)
    }

    /// Largest value together with the first point attaining it.
    pub fn max_entry(&self) -> Option<(&ProjectivePoint, &BigRational)> {
        self.entries
            .iter()
            .fold(None, |best: Option<(&ProjectivePoint, &BigRational)>, (p, v)| match best {
                Some((_, b)) if b >= v => best,
                _ => Some((p, v)),
            })
    }
}

/// `ν(log h, ·)` for `h = Π |A_j z|^{t_j}`: the Lelong number of `log|ℓ|` is 1
/// at the zero of `ℓ` and 0 elsewhere, so each factor contributes its weight
/// at its zero point.
pub fn lelong_spectrum(spec: &ElementaryDomainSpec) -> LelongSpectrum {
    let mut entries = BTreeMap::new();
    for f in spec.factors() {
        *entries
            .entry(f.form.zero_point())
            .or_insert_with(BigRational::zero) += &f.weight;
    }
    LelongSpectrum { entries }
}

pub fn lelong_at(spec: &ElementaryDomainSpec, v: &ProjectivePoint) -> BigRational {
    spec.factors()
        .iter()
        .filter(|f| &f.form.zero_point() == v)
        .fold(BigRational::zero(), |acc, f| acc + &f.weight)
}

/// The spec of `h₁^t · h₂^(1−t)`, i.e. `t log h₁ + (1−t) log h₂`.
pub fn blend(
    first: &ElementaryDomainSpec,
    second: &ElementaryDomainSpec,
    t: &BigRational,
) -> Result<ElementaryDomainSpec> {
    if t.is_negative() || *t > BigRational::one() {
        return Err(Error::BlendOutOfRange(t.clone()));
    }
    let s = BigRational::one() - t;
    let scaled = |spec: &ElementaryDomainSpec, c: &BigRational| -> Vec<RawFactor> {
        if c.is_zero() {
            return Vec::new();
        }
        spec.to_raw()
            .into_iter()
            .map(|mut f| {
                f.weight *= c;
                f
            })
            .collect()
    };
    let mut raw = scaled(first, t);
    raw.extend(scaled(second, &s));
    crate::domain::canonicalize_spec(raw)
}
