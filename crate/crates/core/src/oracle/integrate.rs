//! The two plane-integration strategies for a reduced integrand already known
//! to be locally integrable at every locus.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::exponent::{Layout, Locus};
use super::quad::{bump, integrate_adaptive, periodic_mean, Estimate, NeumaierSum};
use super::slice::{Chart, HartogsSlice, LocalIntegrand};
use super::verdict::Budget;
use crate::domain::{GaussianRational, HomogeneousPolynomial};

/// A locus with its expansion, patch radius and fitted exponent (`> 0`).
pub(crate) struct Patch {
    pub locus: Locus,
    pub local: LocalIntegrand,
    pub radius: f64,
    pub exponent: f64,
}

const MAX_PIECES: usize = 2000;

/// `∫_0^ρ weight(r) r dr ∫ f(re^{iθ}) dθ` in `x = log r`, with the
/// `e^{s x}` tail below the quadrature window added analytically.
fn polar_patch(patch: &Patch, weight: impl Fn(f64) -> f64, rel_tol: f64) -> Estimate {
    let s = patch.exponent;
    let top = patch.radius.ln();
    let width = (37.0 / s).clamp(5.0, 700.0);
    let bottom = top - width;
    let nodes = patch.local.circle_nodes();
    let g = |x: f64| {
        let w = weight(x.exp());
        if w == 0.0 {
            return 0.0;
        }
        w * (TAU.ln() + 2.0 * x + patch.local.log_circle_mean(x, nodes)).exp()
    };
    let body = integrate_adaptive(g, bottom, top, 0.0, rel_tol, MAX_PIECES);
    let tail = g(bottom) / s;
    Estimate {
        value: body.value + tail,
        error: body.error + 0.1 * tail.abs(),
    }
}

/// Smooth partition of unity; see [`Strategy::AdaptivePolar`](super::Strategy).
pub(crate) fn adaptive_polar(
    q: &HomogeneousPolynomial,
    slice: &HartogsSlice,
    layout: &Layout,
    patches: &[Patch],
    budget: &Budget,
) -> Estimate {
    let mut total = Estimate::default();
    for p in patches {
        let est = match p.locus {
            Locus::Finite(_) => polar_patch(p, |r| bump(r / layout.eps), budget.rel_tol),
            Locus::Infinity => polar_patch(p, |r| 1.0 - bump(1.0 / (r * layout.far)), budget.rel_tol),
        };
        total = total + est;
    }
    total + mid_field_polar(q, slice, layout, budget)
}

/// `∫ ψ_mid f dA` with `ψ_mid = β(|w|/R) − Σ_a β(|w − a|/ε)`, in polar
/// coordinates about the origin.
fn mid_field_polar(q: &HomogeneousPolynomial, slice: &HartogsSlice, layout: &Layout, budget: &Budget) -> Estimate {
    let local = LocalIntegrand::new(q, slice, Chart::W, &GaussianRational::from_integer(0));
    let eps = layout.eps;
    let far = layout.far;
    let weight = |w: Complex64| {
        let mut v = bump(w.norm() / far);
        for c in &layout.centers {
            v -= bump((w - c).norm() / eps);
        }
        v
    };
    let base_nodes = local.circle_nodes();
    let circle = |r: f64| {
        if r == 0.0 {
            return 0.0;
        }
        let ln_r = r.ln();
        // resolve the ε/2-wide bump transitions along the circle
        let n_min = base_nodes.max((16.0 * TAU * r / eps).ceil() as usize).next_power_of_two();
        let (mean, _) = periodic_mean(
            |t| {
                let w = Complex64::from_polar(r, t);
                let psi = weight(w);
                if psi == 0.0 {
                    0.0
                } else {
                    psi * local.log_value(w, ln_r).exp()
                }
            },
            n_min,
            1 << 20,
            0.1 * budget.rel_tol,
        );
        TAU * r * mean
    };
    let mut breaks = vec![0.0, 0.5 * far, far];
    for c in &layout.centers {
        breaks.push((c.norm() - eps).max(0.0));
        breaks.push((c.norm() + eps).min(far));
    }
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();
    breaks
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| integrate_adaptive(circle, w[0], w[1], 0.0, budget.rel_tol, MAX_PIECES))
        .fold(Estimate::default(), |a, b| a + b)
}

/// Accumulates stratum pairs: each stratum contributes its two-sample mean,
/// and `(y₁ − y₂)²/4` to the variance of that mean.
#[derive(Default)]
struct StratifiedSum {
    mean: NeumaierSum,
    var: NeumaierSum,
    strata: usize,
}

impl StratifiedSum {
    fn push(&mut self, y1: f64, y2: f64) {
        self.mean.add(0.5 * (y1 + y2));
        self.var.add(0.25 * (y1 - y2) * (y1 - y2));
        self.strata += 1;
    }

    fn estimate(&self) -> Estimate {
        let s = self.strata as f64;
        Estimate {
            value: self.mean.total() / s,
            error: self.var.total().sqrt() / s,
        }
    }
}

/// Runs `sample(u, v)` at two jittered points in each cell of an
/// `n_u × n_v` grid on the unit square.
fn stratified(n: usize, rng: &mut ChaCha8Rng, mut sample: impl FnMut(f64, f64) -> f64) -> Estimate {
    let strata = (n / 2).max(1);
    let n_u = (strata as f64).sqrt().ceil() as usize;
    let n_v = (strata / n_u).max(1);
    let mut acc = StratifiedSum::default();
    for i in 0..n_u {
        for j in 0..n_v {
            let mut draw = || {
                let u = (i as f64 + rng.random::<f64>()) / n_u as f64;
                let v = (j as f64 + rng.random::<f64>()) / n_v as f64;
                sample(u, v)
            };
            let y1 = draw();
            let y2 = draw();
            acc.push(y1, y2);
        }
    }
    acc.estimate()
}

/// Hard partition; see [`Strategy::StratifiedMonteCarlo`](super::Strategy).
pub(crate) fn stratified_monte_carlo(
    q: &HomogeneousPolynomial,
    slice: &HartogsSlice,
    layout: &Layout,
    patches: &[Patch],
    budget: &Budget,
    seed: u64,
) -> Estimate {
    let mid_samples = budget.samples * 2 / 5;
    let patch_samples = (budget.samples - mid_samples) / patches.len().max(1);
    let mut total = Estimate::default();
    let mut total_var = 0.0;
    for (k, p) in patches.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(k as u64 + 1);
        // r ∝ r^{γ−1} on (0, ρ]; γ below s keeps the variance finite.
        let gamma = (0.8 * p.exponent).clamp(0.05, 2.0);
        let rho = p.radius;
        let log_norm = TAU.ln() + gamma * rho.ln() - gamma.ln();
        let est = stratified(patch_samples, &mut rng, |u, v| {
            let u = u.max(f64::MIN_POSITIVE);
            let ln_r = rho.ln() + u.ln() / gamma;
            let delta = Complex64::from_polar(ln_r.exp(), TAU * v);
            (p.local.log_value(delta, ln_r) + (2.0 - gamma) * ln_r + log_norm).exp()
        });
        total.value += est.value;
        total_var += est.error * est.error;
    }

    let local = LocalIntegrand::new(q, slice, Chart::W, &GaussianRational::from_integer(0));
    let half = 0.5 * layout.far;
    let area = PI * half * half;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(0);
    let est = stratified(mid_samples, &mut rng, |u, v| {
        let r = half * u.sqrt();
        let w = Complex64::from_polar(r, TAU * v);
        if r == 0.0 || layout.centers.iter().any(|c| (w - c).norm() < layout.eps) {
            return 0.0;
        }
        area * local.log_value(w, r.ln()).exp()
    });
    total.value += est.value;
    total_var += est.error * est.error;
    total.error = total_var.sqrt();
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::spec_from_points;
    use crate::oracle::quad::integrate_adaptive;
    use crate::oracle::radial_norm_integrand;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn stratified_grid_integrates_smooth_functions() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let est = stratified(40_000, &mut rng, |u, v| u * v + v * v);
        let exact = 0.25 + 1.0 / 3.0;
        assert!((est.value - exact).abs() < 5.0 * est.error + 1e-12, "{est:?}");
        assert!(est.error < 1e-4);
    }

    #[test]
    fn patch_tail_matches_direct_quadrature() {
        let t = BigRational::new(BigInt::from(1), BigInt::from(3));
        let g = |n| Some(GaussianRational::from_integer(n));
        let spec = spec_from_points(&[(g(0), t.clone()), (g(1), t.clone()), (None, t)]).unwrap();
        let slice = HartogsSlice::new(&spec);
        let q = HomogeneousPolynomial::one();
        let layout = Layout::new(&slice);
        let (local, radius) = layout.local(&q, &slice, &Locus::Finite(GaussianRational::from_integer(0)));
        let patch = Patch {
            locus: Locus::Finite(GaussianRational::from_integer(0)),
            local,
            radius,
            exponent: 2.0 / 3.0,
        };
        let est = polar_patch(&patch, |_| 1.0, 1e-10);
        // substitute r = ρ u³ to remove the r^{−1/3} singularity of r·f
        let direct = integrate_adaptive(
            |u| {
                let r = radius * u * u * u;
                let (mean, _) = periodic_mean(
                    |th| radial_norm_integrand(&q, &slice, Complex64::from_polar(r, th)),
                    64,
                    1 << 14,
                    1e-12,
                );
                TAU * mean * r * 3.0 * radius * u * u
            },
            0.0,
            1.0,
            0.0,
            1e-10,
            500,
        );
        assert!((est.value / direct.value - 1.0).abs() < 1e-7, "{est:?} vs {direct:?}");
    }
}
