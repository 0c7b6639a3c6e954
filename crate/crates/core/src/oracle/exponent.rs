//! Singular-exponent regression: the mass of the integrand on the annulus
//! `{r_{k+1} < |δ| < r_k}` behaves like `r^s`, so `s` is the slope of
//! `log(mass)` against `log r` over a geometric ladder of annuli.

use std::f64::consts::TAU;

use num_complex::Complex64;

use super::quad::{gauss7, linear_fit, log_sum_exp};
use super::slice::{Chart, HartogsSlice, LocalIntegrand};
use super::verdict::Budget;
use crate::domain::{GaussianRational, HomogeneousPolynomial, ProjectivePoint};
use crate::error::{Error, Result};

/// Relative spread of annulus masses below which a zero-slope ladder is read
/// as a logarithmic divergence.
const FLAT_SPREAD: f64 = 1e-6;

/// A point of the projective line in the `w = z₁/z₂` chart, or infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Locus {
    Finite(GaussianRational),
    Infinity,
}

impl Locus {
    pub fn to_point(&self) -> ProjectivePoint {
        match self {
            Locus::Finite(a) => ProjectivePoint::affine(a.clone()),
            Locus::Infinity => ProjectivePoint::infinity(),
        }
    }

    pub fn from_point(p: &ProjectivePoint) -> Self {
        match p.affine_coordinate() {
            Some(a) => Locus::Finite(a.clone()),
            None => Locus::Infinity,
        }
    }
}

impl std::fmt::Display for Locus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.to_point().fmt(f)
    }
}

/// Radii of the plane partition in the `w` chart.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub singular: Vec<GaussianRational>,
    pub centers: Vec<Complex64>,
    /// Patch radius around each finite singular point.
    pub eps: f64,
    /// Outer radius `R`: the far field is `|w| > R/2`, i.e. `|u| < 2/R`.
    pub far: f64,
}

impl Layout {
    pub fn new(slice: &HartogsSlice) -> Self {
        let singular = slice.singular_points();
        let centers: Vec<Complex64> = singular.iter().map(GaussianRational::to_complex).collect();
        let mut eps: f64 = 1.0;
        for (i, a) in centers.iter().enumerate() {
            for b in &centers[i + 1..] {
                eps = eps.min(0.5 * (a - b).norm());
            }
        }
        let reach = centers.iter().map(|c| c.norm()).fold(0.0, f64::max) + eps;
        Self {
            singular,
            centers,
            eps,
            far: 4.0 * reach.max(1.0),
        }
    }

    pub fn far_patch_radius(&self) -> f64 {
        2.0 / self.far
    }

    pub fn loci(&self) -> Vec<Locus> {
        let mut v: Vec<Locus> = self.singular.iter().cloned().map(Locus::Finite).collect();
        v.push(Locus::Infinity);
        v
    }

    /// Local expansion and ladder radius for a locus.
    pub fn local(&self, q: &HomogeneousPolynomial, slice: &HartogsSlice, locus: &Locus) -> (LocalIntegrand, f64) {
        match locus {
            Locus::Infinity => (
                LocalIntegrand::new(q, slice, Chart::U, &GaussianRational::from_integer(0)),
                self.far_patch_radius(),
            ),
            Locus::Finite(c) => {
                let radius = if self.singular.contains(c) {
                    self.eps
                } else {
                    let cf = c.to_complex();
                    self.centers
                        .iter()
                        .map(|a| 0.5 * (a - cf).norm())
                        .fold(1.0, f64::min)
                };
                (LocalIntegrand::new(q, slice, Chart::W, c), radius)
            }
        }
    }
}

/// Result of one ladder regression.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExponentFit {
    /// Fitted slope `s` of `log(annulus mass)` against `log r`.
    pub exponent: f64,
    /// `max/min − 1` over the annulus masses.
    pub spread: f64,
    /// RMS residual of the fit in log-mass units.
    pub residual: f64,
    /// Ladder depth used: 0 for the first ladder, `k` after `k` refinements.
    pub depth: usize,
}

/// Fits the ladder whose top radius is `radius·10^{−1 − depth·decades}`.
pub(crate) fn fit_ladder(loc: &LocalIntegrand, radius: f64, depth: usize, budget: &Budget, label: &Locus) -> Result<ExponentFit> {
    let n = budget.annuli_per_decade.max(1);
    let count = n * budget.decades.max(1);
    let step = std::f64::consts::LN_10 / n as f64;
    let top = radius.ln() - std::f64::consts::LN_10 * (1 + depth * budget.decades) as f64;
    let nodes = loc.circle_nodes();
    let mut xs = Vec::with_capacity(count);
    let mut ys = Vec::with_capacity(count);
    for k in 0..count {
        let hi = top - step * k as f64;
        let lo = hi - step;
        let mass = log_sum_exp(
            gauss7(lo, hi).map(|(x, w)| w.ln() + 2.0 * x + TAU.ln() + loc.log_circle_mean(x, nodes)),
        );
        if !mass.is_finite() {
            return Err(Error::DegenerateLadder { center: label.to_string() });
        }
        xs.push(0.5 * (lo + hi));
        ys.push(mass);
    }
    let (slope, _, residual) = linear_fit(&xs, &ys);
    let hi = ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let lo = ys.iter().cloned().fold(f64::INFINITY, f64::min);
    Ok(ExponentFit {
        exponent: slope,
        spread: (hi - lo).exp_m1(),
        residual,
        depth,
    })
}

/// How the integrand behaves near one locus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum LocalStatus {
    Integrable,
    Divergent,
    Inconclusive,
}

/// First ladder, refined while the slope stays inside the margin.
pub(crate) fn assess(loc: &LocalIntegrand, radius: f64, budget: &Budget, label: &Locus) -> Result<(LocalStatus, ExponentFit)> {
    let mut fit = fit_ladder(loc, radius, 0, budget, label)?;
    let mut depth = 0;
    while fit.exponent.abs() < budget.margin && depth < budget.refinements {
        depth += 1;
        fit = fit_ladder(loc, radius, depth, budget, label)?;
    }
    let status = if fit.exponent >= budget.margin {
        LocalStatus::Integrable
    } else if fit.exponent <= -budget.margin || fit.spread < FLAT_SPREAD {
        LocalStatus::Divergent
    } else {
        LocalStatus::Inconclusive
    };
    Ok((status, fit))
}

/// Fitted annulus-mass exponent of `|Q(w,1)|² e^{−2(d+2)φ(w)}` at `center`.
///
/// Finite centers use the `w` chart with shrinking annuli; infinity uses the
/// `u = 1/w` chart, i.e. expanding annuli in `w`. The slope is refined by
/// deeper ladders while it lies within `budget.margin` of zero.
pub fn local_exponent(q: &HomogeneousPolynomial, slice: &HartogsSlice, center: &Locus, budget: &Budget) -> Result<ExponentFit> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let layout = Layout::new(slice);
    let (loc, radius) = layout.local(q, slice, center);
    assess(&loc, radius, budget, center).map(|(_, fit)| fit)
}
