//! Monte Carlo estimate of `∫_D p · conj(q) dL⁴` for two forms of arbitrary
//! degrees, sampled over the full four-dimensional domain. It does not use
//! the circular symmetry that makes cross-degree products vanish, so it can
//! test that symmetry.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::domain::{ElementaryDomainSpec, HomogeneousPolynomial};
use crate::oracle::quad::NeumaierSum;
use crate::oracle::{HartogsSlice, Layout};

/// Exponent of the `|δ|^{γ−2}` proposal around each singular locus.
const GAMMA: f64 = 0.25;

/// Sample mean with its standard error (of the complex mean's modulus).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampledInner {
    pub value: Complex64,
    pub std_error: f64,
}

/// Mixture proposal on the `w` plane: half Cauchy-like mass
/// `1/(π(1+|w|²)²)`, half split over power-law discs at the singular loci.
struct Proposal<'a> {
    layout: &'a Layout,
}

impl Proposal<'_> {
    fn components(&self) -> usize {
        self.layout.centers.len() + 1
    }

    fn disc_density(&self, r: f64, rho: f64) -> f64 {
        if r >= rho || r == 0.0 {
            return 0.0;
        }
        GAMMA * r.powf(GAMMA - 2.0) / (TAU * rho.powf(GAMMA))
    }

    fn density(&self, w: Complex64) -> f64 {
        let r2 = w.norm_sqr();
        let mut local = 0.0;
        for c in &self.layout.centers {
            local += self.disc_density((w - c).norm(), self.layout.eps);
        }
        // u = 1/w, dA(u) = dA(w)/|w|⁴
        local += self.disc_density(1.0 / w.norm(), self.layout.far_patch_radius()) / (r2 * r2);
        0.5 / (PI * (1.0 + r2).powi(2)) + 0.5 * local / self.components() as f64
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Complex64 {
        let theta = TAU * rng.random::<f64>();
        let u: f64 = rng.random::<f64>();
        if rng.random::<f64>() < 0.5 {
            let r = (u / (1.0 - u)).sqrt();
            return Complex64::from_polar(r, theta);
        }
        let k = rng.random_range(0..self.components());
        if k < self.layout.centers.len() {
            let r = self.layout.eps * u.powf(1.0 / GAMMA);
            self.layout.centers[k] + Complex64::from_polar(r, theta)
        } else {
            let r = self.layout.far_patch_radius() * u.powf(1.0 / GAMMA);
            Complex64::from_polar(r, theta).inv()
        }
    }
}

/// Estimates `∫_D p(z) conj(q(z)) dL⁴(z)` with `samples` draws of
/// `z = (w t, t)`: `w` from a mixture proposal, `t` uniform in angle and
/// with `|t|` drawn from the radial weight `|t|^{d+d'+3}` on `|t| < e^{−φ(w)}`.
pub fn sampled_inner_product(
    p: &HomogeneousPolynomial,
    q: &HomogeneousPolynomial,
    spec: &ElementaryDomainSpec,
    samples: usize,
    seed: u64,
) -> SampledInner {
    let slice = HartogsSlice::new(spec);
    let layout = Layout::new(&slice);
    let proposal = Proposal { layout: &layout };
    let k = (p.degree() + q.degree() + 4) as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut re, mut im, mut re2, mut im2) = (NeumaierSum::default(), NeumaierSum::default(), NeumaierSum::default(), NeumaierSum::default());
    for _ in 0..samples {
        let w = proposal.sample(&mut rng);
        let phi = slice.phi(w);
        if !phi.is_finite() {
            continue;
        }
        let rho = (-phi).exp();
        let radius = rho * rng.random::<f64>().powf(1.0 / k);
        let t = Complex64::from_polar(radius, TAU * rng.random::<f64>());
        // p(wt, t) = t^d p(w, 1) by homogeneity; magnitudes are combined in logs
        let one = Complex64::new(1.0, 0.0);
        let pw = p.eval([w, one]);
        let qw = q.eval([w, one]);
        let ln_pdf_t = k.ln() + (k - 2.0) * radius.ln() - k * rho.ln() - TAU.ln();
        let ln_mag = pw.norm().ln() + qw.norm().ln() + (k - 2.0) * radius.ln() - proposal.density(w).ln() - ln_pdf_t;
        let phase = pw.arg() - qw.arg() + (p.degree() as f64 - q.degree() as f64) * t.arg();
        let x = if ln_mag == f64::NEG_INFINITY {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::from_polar(ln_mag.exp(), phase)
        };
        re.add(x.re);
        im.add(x.im);
        re2.add(x.re * x.re);
        im2.add(x.im * x.im);
    }
    let n = samples as f64;
    let mean = Complex64::new(re.total() / n, im.total() / n);
    let var = (re2.total() / n - mean.re * mean.re) + (im2.total() / n - mean.im * mean.im);
    SampledInner {
        value: mean,
        std_error: (var.max(0.0) / n).sqrt(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{spec_from_points, GaussianRational};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn four_lines() -> ElementaryDomainSpec {
        let t = BigRational::new(BigInt::from(1), BigInt::from(4));
        let g = |n| Some(GaussianRational::from_integer(n));
        spec_from_points(&[(g(0), t.clone()), (g(1), t.clone()), (g(-1), t.clone()), (None, t)]).unwrap()
    }

    #[test]
    fn proposal_density_matches_sampler() {
        // E[f/p] = ∫ f for the Gaussian f = e^{−|w|²}/π, whose integral is 1
        let slice = HartogsSlice::new(&four_lines());
        let layout = Layout::new(&slice);
        let proposal = Proposal { layout: &layout };
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let n = 200_000;
        let (mut s, mut s2) = (0.0, 0.0);
        for _ in 0..n {
            let w = proposal.sample(&mut rng);
            let x = (-w.norm_sqr()).exp() / PI / proposal.density(w);
            s += x;
            s2 += x * x;
        }
        let mean = s / n as f64;
        let se = ((s2 / n as f64 - mean * mean) / n as f64).sqrt();
        assert!((mean - 1.0).abs() < 4.0 * se, "{mean} ± {se}");
    }

    #[test]
    fn deterministic_in_the_seed() {
        let spec = four_lines();
        let one = HomogeneousPolynomial::one();
        let z1: HomogeneousPolynomial = "0,1".parse().unwrap();
        let a = sampled_inner_product(&one, &z1, &spec, 1000, 4);
        let b = sampled_inner_product(&one, &z1, &spec, 1000, 4);
        assert_eq!(a, b);
        assert!(a.std_error > 0.0);
    }
}
