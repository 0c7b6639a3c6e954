use serde::{Deserialize, Serialize};

use crate::domain::ProjectivePoint;

/// Work limits for one oracle call.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    /// Total Monte Carlo samples across all regions.
    pub samples: usize,
    pub annuli_per_decade: usize,
    pub decades: usize,
    /// Exponents with `|s| < margin` are not trusted from one ladder.
    pub margin: f64,
    /// Extra, deeper ladders tried for exponents inside the margin.
    pub refinements: usize,
    /// Relative tolerance of the deterministic quadrature.
    pub rel_tol: f64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            samples: 1_000_000,
            annuli_per_decade: 12,
            decades: 4,
            margin: 0.05,
            refinements: 2,
            rel_tol: 1e-9,
        }
    }
}

/// Integration scheme for a finite plane integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    /// Smooth partition of unity; adaptive Gauss–Kronrod in `log r` on each
    /// singular patch, polar quadrature on the rest.
    AdaptivePolar,
    /// Hard partition; importance-sampled singular discs and a stratified
    /// uniform mid field.
    StratifiedMonteCarlo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictKind {
    Finite,
    Divergent,
    Inconclusive,
}

/// Outcome of a numerical `L²` norm computation.
///
/// `Finite` carries `value` and `std_error`; `Divergent` and `Inconclusive`
/// carry the offending locus (`[1:0]` is infinity) and its fitted exponent.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntegralVerdict {
    pub kind: VerdictKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub std_error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub divergence_locus: Option<ProjectivePoint>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub local_exponent: Option<f64>,
}

impl IntegralVerdict {
    pub fn finite(value: f64, std_error: f64) -> Self {
        Self {
            kind: VerdictKind::Finite,
            value: Some(value),
            std_error: Some(std_error.abs()),
            divergence_locus: None,
            local_exponent: None,
        }
    }

    pub fn divergent(locus: ProjectivePoint, exponent: f64) -> Self {
        Self {
            kind: VerdictKind::Divergent,
            value: None,
            std_error: None,
            divergence_locus: Some(locus),
            local_exponent: Some(exponent),
        }
    }

    pub fn inconclusive(locus: ProjectivePoint, exponent: f64) -> Self {
        Self {
            kind: VerdictKind::Inconclusive,
            ..Self::divergent(locus, exponent)
        }
    }

    pub fn is_finite(&self) -> bool {
        self.kind == VerdictKind::Finite
    }

    pub fn is_divergent(&self) -> bool {
        self.kind == VerdictKind::Divergent
    }

    /// `value ± std_error`, or the kind name.
    pub fn summary(&self) -> String {
        match (self.kind, self.value, self.std_error) {
            (VerdictKind::Finite, Some(v), Some(e)) => format!("Finite {v:.10e} ± {e:.2e}"),
            (kind, _, _) => {
                let locus = self.divergence_locus.as_ref().map(|p| format!(" at {p}")).unwrap_or_default();
                let s = self.local_exponent.map(|s| format!(" (exponent {s:.4})")).unwrap_or_default();
                format!("{kind:?}{locus}{s}")
            }
        }
    }
}
