//! The Hartogs slice `φ(w) = log h(w, 1)` and exact local expansions of the
//! reduced integrand `|Q(w,1)|² exp(−2(d+2)φ(w))` around chosen centers.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::domain::poly::taylor_shift;
use crate::domain::{ElementaryDomainSpec, GaussianRational, HomogeneousPolynomial};

#[derive(Clone, Debug)]
struct SliceTerm {
    a: GaussianRational,
    b: GaussianRational,
    af: Complex64,
    bf: Complex64,
    t: f64,
    t_exact: BigRational,
}

/// `φ(w) = Σ t_j log|a_j w + b_j|` for the factors `A_j z = a_j z₁ + b_j z₂`.
#[derive(Clone, Debug)]
pub struct HartogsSlice {
    spec: ElementaryDomainSpec,
    terms: Vec<SliceTerm>,
}

impl HartogsSlice {
    pub fn new(spec: &ElementaryDomainSpec) -> Self {
        let terms = spec
            .factors()
            .iter()
            .map(|f| SliceTerm {
                a: f.form.a().clone(),
                b: f.form.b().clone(),
                af: f.form.a().to_complex(),
                bf: f.form.b().to_complex(),
                t: f.weight.to_f64().expect("weight is finite"),
                t_exact: f.weight.clone(),
            })
            .collect();
        Self {
            spec: spec.clone(),
            terms,
        }
    }

    pub fn spec(&self) -> &ElementaryDomainSpec {
        &self.spec
    }

    /// `−∞` at singular points.
    pub fn phi(&self, w: Complex64) -> f64 {
        self.terms
            .iter()
            .map(|s| s.t * (s.af * w + s.bf).norm().ln())
            .sum()
    }

    /// `limsup_{|w|→∞} (φ(w) − log|w|)`: `Σ t_j log|a_j|` when no factor
    /// vanishes at infinity, `−∞` otherwise.
    pub fn growth_constant(&self) -> f64 {
        if self.has_singularity_at_infinity() {
            return f64::NEG_INFINITY;
        }
        self.terms.iter().map(|s| s.t * s.af.norm().ln()).sum()
    }

    /// Finite points where `φ = −∞`, sorted and without repeats.
    pub fn singular_points(&self) -> Vec<GaussianRational> {
        let mut pts: Vec<GaussianRational> = self
            .terms
            .iter()
            .filter(|s| !s.a.is_zero())
            .map(|s| -(&s.b / &s.a))
            .collect();
        pts.sort();
        pts.dedup();
        pts
    }

    /// Some factor is `z₂` (up to scale), so `φ(w) − log|w| → −∞`.
    pub fn has_singularity_at_infinity(&self) -> bool {
        self.terms.iter().any(|s| s.a.is_zero())
    }
}

/// Affine chart of the projective line used for a local expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Chart {
    /// `w = z₁/z₂`
    W,
    /// `u = z₂/z₁`, covering infinity at `u = 0`
    U,
}

/// `f(c + δ)` written as `|δ|^p · C · |P(δ)|² · Π|α_k + β_k δ|^{e_k}` with
/// `P(0) ≠ 0` and `α_k ≠ 0`. Coefficients come from exact arithmetic, so the
/// power `p` is exact and stays separated from the floating-point factors.
///
/// In the `U` chart the same shape describes `f(1/u)|u|^{−4}`, the density
/// of the plane integral in the coordinate `u`; this uses `Σ t_j = 1`.
#[derive(Clone, Debug)]
pub(crate) struct LocalIntegrand {
    poly: Vec<Complex64>,
    forms: Vec<(Complex64, Complex64, f64)>,
    log_const: f64,
    power: f64,
    exact_power: BigRational,
}

impl LocalIntegrand {
    pub(crate) fn new(q: &HomogeneousPolynomial, slice: &HartogsSlice, chart: Chart, center: &GaussianRational) -> Self {
        let d = q.degree() as i64;
        let coeffs = match chart {
            Chart::W => q.dehomogenize_second(),
            Chart::U => q.dehomogenize_first(),
        };
        let shifted = taylor_shift(&coeffs, center);
        let order = shifted.iter().position(|c| !c.is_zero()).unwrap_or(shifted.len());
        let poly: Vec<Complex64> = shifted[order..].iter().map(GaussianRational::to_complex).collect();

        let mut forms = Vec::new();
        let mut log_const = 0.0;
        let mut vanishing = BigRational::zero();
        for s in &slice.terms {
            let (alpha, beta) = match chart {
                Chart::W => (&s.a * center + &s.b, s.a.clone()),
                Chart::U => (&s.b * center + &s.a, s.b.clone()),
            };
            let e = -2.0 * (d + 2) as f64 * s.t;
            if alpha.is_zero() {
                vanishing += &s.t_exact;
                log_const += e * beta.to_complex().norm().ln();
            } else if beta.is_zero() {
                log_const += e * alpha.to_complex().norm().ln();
            } else {
                forms.push((alpha.to_complex(), beta.to_complex(), e));
            }
        }
        let exact_power = BigRational::from_integer((2 * order as i64).into())
            - vanishing * BigRational::from_integer((2 * (d + 2)).into());
        Self {
            poly,
            forms,
            log_const,
            power: exact_power.to_f64().expect("finite exponent"),
            exact_power,
        }
    }

    /// `ln f(c + δ)` for `δ ≠ 0`, given `ln|δ|`.
    pub(crate) fn log_value(&self, delta: Complex64, ln_r: f64) -> f64 {
        if self.poly.is_empty() {
            return f64::NEG_INFINITY;
        }
        let p = self.poly.iter().rev().fold(Complex64::zero(), |acc, c| acc * delta + c);
        let mut v = 2.0 * p.norm().ln() + self.log_const + self.power * ln_r;
        for (alpha, beta, e) in &self.forms {
            v += e * (alpha + beta * delta).norm().ln();
        }
        v
    }

    /// `ln` of the angular mean of `f` on the circle `|δ| = r`, by an
    /// `n`-point trapezoid rule in the log domain.
    pub(crate) fn log_circle_mean(&self, ln_r: f64, n: usize) -> f64 {
        let r = ln_r.exp();
        let step = std::f64::consts::TAU / n as f64;
        let logs = (0..n).map(|k| self.log_value(Complex64::from_polar(r, k as f64 * step), ln_r));
        super::quad::log_sum_exp(logs) - (n as f64).ln()
    }

    /// Node count for circle means that resolves `|P|²` exactly and the
    /// remaining factors to double precision while `|β δ| ≤ |α|/2`.
    pub(crate) fn circle_nodes(&self) -> usize {
        (2 * self.poly.len() + 64).next_power_of_two()
    }

    /// `f(c)` exactly at the center: the limit when the exact power is zero,
    /// `0` when it is positive and `+∞` when it is negative.
    pub(crate) fn value_at_center(&self) -> f64 {
        if self.poly.is_empty() {
            return 0.0;
        }
        match self.exact_power.cmp(&BigRational::zero()) {
            std::cmp::Ordering::Greater => 0.0,
            std::cmp::Ordering::Less => f64::INFINITY,
            std::cmp::Ordering::Equal => {
                let mut v = 2.0 * self.poly[0].norm().ln() + self.log_const;
                for (alpha, _, e) in &self.forms {
                    v += e * alpha.norm().ln();
                }
                v.exp()
            }
        }
    }
}
