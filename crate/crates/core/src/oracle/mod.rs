//! Numerical `L²` norms on `D_h`, independent of the algebraic criterion.
//!
//! Writing `z = (w t, t)` and integrating out `t` over the disc
//! `|t| < e^{−φ(w)}` reduces `∫_D |Q|² dL⁴` for a form of degree `d` to
//!
//! ```text
//! π/(d+2) · ∫_C |Q(w,1)|² e^{−2(d+2)φ(w)} dL²(w),   φ(w) = log h(w, 1).
//! ```
//!
//! The plane integral can only diverge at the finite singular points of `φ`
//! and at infinity. Each such locus is tested by fitting the growth of the
//! integrand's mass on a ladder of annuli; only when every locus is
//! integrable is the integral evaluated.

mod exponent;
mod integrate;
pub mod quad;
mod slice;
mod verdict;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

pub use exponent::{local_exponent, ExponentFit, Locus};
pub use slice::HartogsSlice;
pub use verdict::{Budget, IntegralVerdict, Strategy, VerdictKind};

pub(crate) use exponent::Layout;
use exponent::{assess, LocalStatus};
use integrate::Patch;
use slice::{Chart, LocalIntegrand};

use crate::domain::{ElementaryDomainSpec, GaussianRational, HomogeneousPolynomial};
use crate::error::{Error, Result};

/// `|Q(w,1)|² exp(−2(d+2)φ(w))`.
///
/// Exact at singular points: `+∞` where the integrand blows up, its finite
/// limit where the singular powers cancel exactly, `0` where `Q` vanishes to
/// higher order. Never NaN.
pub fn radial_norm_integrand(q: &HomogeneousPolynomial, slice: &HartogsSlice, w: Complex64) -> f64 {
    let exact = GaussianRational::from_complex(w).expect("finite input");
    if slice.singular_points().contains(&exact) {
        return LocalIntegrand::new(q, slice, Chart::W, &exact).value_at_center();
    }
    let d = q.degree() as f64;
    let qw = q.eval([w, Complex64::new(1.0, 0.0)]);
    let phi = slice.phi(w);
    if phi.is_finite() && qw.norm() > 0.0 {
        return (2.0 * qw.norm().ln() - 2.0 * (d + 2.0) * phi).exp();
    }
    // A factor or Q(w,1) rounded to zero off the exact zero set.
    exact_log_integrand(q, slice, &exact).exp()
}

fn ln_rational(x: &BigRational) -> f64 {
    fn ln_int(n: &num_bigint::BigInt) -> f64 {
        let bits = n.bits();
        let shift = bits.saturating_sub(60);
        let top: f64 = num_traits::ToPrimitive::to_f64(&(n.magnitude() >> shift)).expect("fits");
        top.ln() + shift as f64 * std::f64::consts::LN_2
    }
    ln_int(x.numer()) - ln_int(x.denom())
}

fn exact_log_integrand(q: &HomogeneousPolynomial, slice: &HartogsSlice, w: &GaussianRational) -> f64 {
    let one = GaussianRational::from_integer(1);
    let qw = q.eval_exact(w, &one).norm_sqr();
    if qw.is_zero() {
        return f64::NEG_INFINITY;
    }
    let d2 = (q.degree() + 2) as f64;
    let mut v = ln_rational(&qw);
    for f in slice.spec().factors() {
        let t = num_traits::ToPrimitive::to_f64(&f.weight).expect("finite");
        v -= d2 * t * ln_rational(&f.form.eval_exact(w, &one).norm_sqr());
    }
    v
}

/// `∫_D |Q|² dL⁴` with the default strategy, [`Strategy::AdaptivePolar`].
pub fn radial_integral(q: &HomogeneousPolynomial, slice: &HartogsSlice, budget: &Budget, seed: u64) -> Result<IntegralVerdict> {
    radial_integral_with(q, slice, budget, seed, Strategy::AdaptivePolar)
}

/// `∫_D |Q|² dL⁴` with an explicit strategy. Loci are screened first: any
/// divergent locus gives `Divergent`, else any unresolved one gives
/// `Inconclusive`; the locus with the smallest exponent is reported.
pub fn radial_integral_with(
    q: &HomogeneousPolynomial,
    slice: &HartogsSlice,
    budget: &Budget,
    seed: u64,
    strategy: Strategy,
) -> Result<IntegralVerdict> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let layout = Layout::new(slice);
    let mut patches = Vec::new();
    let mut worst: Option<(LocalStatus, Locus, f64)> = None;
    for locus in layout.loci() {
        let (local, radius) = layout.local(q, slice, &locus);
        let (status, fit) = assess(&local, radius, budget, &locus)?;
        if status != LocalStatus::Integrable {
            let rank = |s: LocalStatus| if s == LocalStatus::Divergent { 0 } else { 1 };
            let replace = match &worst {
                None => true,
                Some((ws, _, we)) => (rank(status), fit.exponent) < (rank(*ws), *we),
            };
            if replace {
                worst = Some((status, locus.clone(), fit.exponent));
            }
        }
        patches.push(Patch {
            locus,
            local,
            radius,
            exponent: fit.exponent,
        });
    }
    if let Some((status, locus, s)) = worst {
        return Ok(match status {
            LocalStatus::Divergent => IntegralVerdict::divergent(locus.to_point(), s),
            _ => IntegralVerdict::inconclusive(locus.to_point(), s),
        });
    }
    let est = match strategy {
        Strategy::AdaptivePolar => integrate::adaptive_polar(q, slice, &layout, &patches, budget),
        Strategy::StratifiedMonteCarlo => integrate::stratified_monte_carlo(q, slice, &layout, &patches, budget, seed),
    };
    let scale = std::f64::consts::PI / (q.degree() + 2) as f64;
    Ok(IntegralVerdict::finite(scale * est.value, scale * est.error))
}

/// Volume `L⁴(D)`: the norm of the constant 1.
pub fn volume_estimate(spec: &ElementaryDomainSpec, budget: &Budget, seed: u64) -> Result<IntegralVerdict> {
    radial_integral(&HomogeneousPolynomial::one(), &HartogsSlice::new(spec), budget, seed)
}
