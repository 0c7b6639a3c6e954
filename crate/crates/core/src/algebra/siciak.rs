//! Finite approximants of domains whose zero set is dense in `P¹`.
//!
//! An approximant takes `h = Π_{j≤m} |z₁ − a_j z₂|^{w_j}` over the first `m`
//! terms of a dense sequence `(a_j)`; as `m` grows the zero points
//! `[a_j:1]` fill out the projective line. Blending with a base spec via
//! `t log h_base + (1−t) log h_approx` moves the largest Lelong number across
//! the thresholds 1/2 and 1/3. These are approximations only; no limit domain
//! is constructed.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::spectrum::{blend, lelong_spectrum};
use crate::domain::{canonicalize_spec, ElementaryDomainSpec, GaussianRational, ProjectivePoint, RawFactor};
use crate::error::{Error, Result};

/// How the `m` approximant weights are chosen before renormalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightSchedule {
    Uniform,
    /// `w_j ∝ ratio^j`.
    Geometric(BigRational),
    /// Explicit weights, one per point.
    Explicit(Vec<BigRational>),
}

impl WeightSchedule {
    fn weights(&self, m: usize) -> Result<Vec<BigRational>> {
        let raw: Vec<BigRational> = match self {
            WeightSchedule::Uniform => vec![BigRational::one(); m],
            WeightSchedule::Geometric(r) => {
                let mut w = BigRational::one();
                (0..m)
                    .map(|_| {
                        let cur = w.clone();
                        w = &w * r;
                        cur
                    })
                    .collect()
            }
            WeightSchedule::Explicit(v) => v.iter().take(m).cloned().collect(),
        };
        if raw.len() < m {
            return Err(Error::BadSchedule(raw.len()));
        }
        if let Some(k) = raw.iter().position(|w| !w.is_positive()) {
            return Err(Error::BadSchedule(k));
        }
        let total = raw.iter().fold(BigRational::zero(), |a, b| a + b);
        Ok(raw.into_iter().map(|w| w / &total).collect())
    }
}

/// Spec with factors `z₁ − a_j z₂` over the first `m` terms of `dense_seq`.
/// Repeated points are merged.
pub fn siciak_approximant(
    m: usize,
    dense_seq: impl IntoIterator<Item = GaussianRational>,
    schedule: &WeightSchedule,
) -> Result<ElementaryDomainSpec> {
    if m == 0 {
        return Err(Error::EmptyApproximant);
    }
    let points: Vec<GaussianRational> = dense_seq.into_iter().take(m).collect();
    if points.len() < m {
        return Err(Error::EmptyApproximant);
    }
    let weights = schedule.weights(m)?;
    canonicalize_spec(
        points
            .into_iter()
            .zip(weights)
            .map(|(a, w)| RawFactor::new(GaussianRational::one(), -a, w)),
    )
}

/// Enumerates every Gaussian rational exactly once: level `n` adds the values
/// `(p + r·i)/q` with `q ≤ n` and `|p|, |r| ≤ n` not already produced,
/// ordered by modulus and then lexicographically.
#[derive(Debug, Default)]
pub struct GaussianRationalEnumeration {
    level: i64,
    pending: Vec<GaussianRational>,
    seen: HashSet<GaussianRational>,
}

impl GaussianRationalEnumeration {
    pub fn new() -> Self {
        Self::default()
    }

    fn fill(&mut self) {
        while self.pending.is_empty() {
            self.level += 1;
            let n = self.level;
            let mut fresh = Vec::new();
            for q in 1..=n {
                for p in -n..=n {
                    for r in -n..=n {
                        let z = GaussianRational::new(
                            BigRational::new(BigInt::from(p), BigInt::from(q)),
                            BigRational::new(BigInt::from(r), BigInt::from(q)),
                        );
                        if self.seen.insert(z.clone()) {
                            fresh.push(z);
                        }
                    }
                }
            }
            fresh.sort_by(|a, b| a.norm_sqr().cmp(&b.norm_sqr()).then_with(|| a.cmp(b)));
            fresh.reverse();
            self.pending = fresh;
        }
    }
}

impl Iterator for GaussianRationalEnumeration {
    type Item = GaussianRational;
    fn next(&mut self) -> Option<GaussianRational> {
        self.fill();
        self.pending.pop()
    }
}

/// The three behaviours a blended approximant can be steered into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SiciakRegime {
    /// Infinite volume, `K_D ≡ 0`: some Lelong number ≥ 1/2.
    VolumeInfinite,
    /// Positive kernel without Bergman metric: max Lelong number in [1/3, 1/2).
    KernelOnly,
    /// Bergman metric: every Lelong number < 1/3.
    Metric,
}

impl SiciakRegime {
    pub fn of_max_lelong(max_nu: &BigRational) -> Self {
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new(1.into(), 3.into());
        if *max_nu >= half {
            SiciakRegime::VolumeInfinite
        } else if *max_nu >= third {
            SiciakRegime::KernelOnly
        } else {
            SiciakRegime::Metric
        }
    }

    pub fn of_spec(spec: &ElementaryDomainSpec) -> Self {
        let max = lelong_spectrum(spec)
            .max_entry()
            .map(|(_, v)| v.clone())
            .unwrap_or_else(BigRational::zero);
        Self::of_max_lelong(&max)
    }
}

impl fmt::Display for SiciakRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SiciakRegime::VolumeInfinite => "volume-infinite",
            SiciakRegime::KernelOnly => "kernel-only",
            SiciakRegime::Metric => "metric",
        })
    }
}

impl FromStr for SiciakRegime {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "volume-infinite" => Ok(SiciakRegime::VolumeInfinite),
            "kernel-only" => Ok(SiciakRegime::KernelOnly),
            "metric" => Ok(SiciakRegime::Metric),
            _ => Err(Error::Parse {
                what: "regime",
                input: s.to_string(),
                reason: "expected volume-infinite, kernel-only or metric".into(),
            }),
        }
    }
}

/// Result of [`siciak_blend`].
#[derive(Clone, Debug)]
pub struct SiciakBlend {
    pub spec: ElementaryDomainSpec,
    pub max_lelong: BigRational,
    pub regime: SiciakRegime,
}

/// Blends `base` (weight `t`) with a uniform `m`-point approximant whose
/// points avoid the support of `base`, and checks the requested regime.
///
/// Without a base the approximant alone is used and `t` is ignored.
pub fn siciak_blend(
    base: Option<&ElementaryDomainSpec>,
    m: usize,
    t: &BigRational,
    target: Option<SiciakRegime>,
) -> Result<SiciakBlend> {
    if t.is_negative() || *t > BigRational::one() {
        return Err(Error::BlendOutOfRange(t.clone()));
    }
    let avoid: HashSet<ProjectivePoint> = base
        .map(|b| lelong_spectrum(b).support().cloned().collect())
        .unwrap_or_default();
    let seq = GaussianRationalEnumeration::new()
        .filter(move |a| !avoid.contains(&ProjectivePoint::affine(a.clone())));
    let approx = siciak_approximant(m, seq, &WeightSchedule::Uniform)?;
    let spec = match base {
        Some(b) => blend(b, &approx, t)?,
        None => approx,
    };
    let max_lelong = lelong_spectrum(&spec)
        .max_entry()
        .map(|(_, v)| v.clone())
        .expect("spec has support");
    let regime = SiciakRegime::of_max_lelong(&max_lelong);
    if let Some(target) = target {
        if target != regime {
            return Err(Error::UnreachableTarget {
                target: target.to_string(),
                achieved: max_lelong,
            });
        }
    }
    Ok(SiciakBlend {
        spec,
        max_lelong,
        regime,
    })
}
