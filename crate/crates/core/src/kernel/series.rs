use std::fmt::Write as _;

use num_complex::Complex64;

use super::basis::{degree_basis, DegreeBasis};
use crate::domain::{evaluate_h, ElementaryDomainSpec};
use crate::error::{Error, Result};
use crate::oracle::Budget;

/// Default truncation degree of the kernel series.
pub const DEFAULT_DMAX: i64 = 24;

/// Orthonormal bases for degrees `0..=dmax` of one domain; all kernel
/// evaluations share them.
#[derive(Clone, Debug)]
pub struct KernelSeries {
    spec: ElementaryDomainSpec,
    bases: Vec<DegreeBasis>,
}

impl KernelSeries {
    /// `dmax = −1` gives the empty series.
    pub fn new(spec: &ElementaryDomainSpec, dmax: i64, budget: &Budget, seed: u64) -> Result<Self> {
        let bases = (0..=dmax.max(-1))
            .map(|d| degree_basis(spec, d as u32, budget, seed))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            spec: spec.clone(),
            bases,
        })
    }

    pub fn dmax(&self) -> i64 {
        self.bases.len() as i64 - 1
    }

    pub fn bases(&self) -> &[DegreeBasis] {
        &self.bases
    }

    pub fn spec(&self) -> &ElementaryDomainSpec {
        &self.spec
    }

    /// `K_d(z) = Σ_j |P_{d,j}(z)|²`.
    pub fn slice_kernel(&self, d: usize, z: [Complex64; 2]) -> f64 {
        self.bases[d].slice_kernel(z)
    }

    /// `Σ_{d ≤ dmax} K_d(z)` for each truncation `dmax = 0..=self.dmax()`.
    pub fn cumulative(&self, z: [Complex64; 2]) -> Vec<f64> {
        self.bases
            .iter()
            .scan(0.0, |acc, b| {
                *acc += b.slice_kernel(z);
                Some(*acc)
            })
            .collect()
    }

    /// `Σ_{d ≤ dmax} K_d(z)` (0 for `dmax < 0`). Errors outside the domain.
    pub fn partial_sum(&self, z: [Complex64; 2], dmax: i64) -> Result<f64> {
        let h = evaluate_h(&self.spec, z);
        if h >= 1.0 {
            return Err(Error::OutsideDomain(h));
        }
        let upto = dmax.min(self.dmax());
        Ok(self.bases[..(upto + 1).max(0) as usize]
            .iter()
            .map(|b| b.slice_kernel(z))
            .sum())
    }

    /// `(d, K_d(z)^{1/(2d)})` for `1 ≤ d ≤ dmax` with nonempty `J_d`.
    pub fn hbk(&self, z: [Complex64; 2]) -> Vec<(u32, f64)> {
        self.bases
            .iter()
            .skip(1)
            .filter(|b| b.rank() > 0)
            .map(|b| (b.degree, b.slice_kernel(z).powf(1.0 / (2.0 * b.degree as f64))))
            .collect()
    }

    /// Kernel values along `λ·z` for `|λ| ∈ radii`, after scaling `z` to
    /// `h(z) = 1`.
    pub fn ray(&self, direction: [Complex64; 2], radii: &[f64]) -> Result<KernelRaySample> {
        let h = evaluate_h(&self.spec, direction);
        if h == 0.0 || !h.is_finite() {
            return Err(Error::DirectionInZeroSet);
        }
        let z = [direction[0] / h, direction[1] / h];
        let mut cumulative = Vec::with_capacity(radii.len());
        for &r in radii {
            if !(0.0..1.0).contains(&r) {
                return Err(Error::OutsideDomain(r));
            }
            // K_d(λz) = |λ|^{2d} K_d(z)
            let values: Vec<f64> = self
                .bases
                .iter()
                .scan(0.0, |acc, b| {
                    *acc += r.powi(2 * b.degree as i32) * b.slice_kernel(z);
                    Some(*acc)
                })
                .collect();
            cumulative.push(values);
        }
        Ok(KernelRaySample {
            direction: z,
            radii: radii.to_vec(),
            partial_sums: cumulative.iter().map(|c| c.last().copied().unwrap_or(0.0)).collect(),
            cumulative,
        })
    }
}

/// Truncated kernel along one complex line through the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelRaySample {
    /// Scaled so that `h(direction) = 1`.
    pub direction: [Complex64; 2],
    pub radii: Vec<f64>,
    /// `K^{(≤dmax)}(λ·direction)` at the full truncation, one per radius.
    pub partial_sums: Vec<f64>,
    /// `cumulative[i][D]` is the partial sum up to degree `D` at `radii[i]`.
    pub cumulative: Vec<Vec<f64>>,
}

/// `Σ_{d ≤ dmax} Σ_j |P_{d,j}(z)|²` for a point of the domain.
pub fn kernel_partial_sum(spec: &ElementaryDomainSpec, z: [Complex64; 2], dmax: i64, budget: &Budget, seed: u64) -> Result<f64> {
    let h = evaluate_h(spec, z);
    if h >= 1.0 {
        return Err(Error::OutsideDomain(h));
    }
    KernelSeries::new(spec, dmax, budget, seed)?.partial_sum(z, dmax)
}

/// Raw sequence `(d, (Σ_j |P_{d,j}(z)|²)^{1/(2d)})`, `1 ≤ d ≤ dmax`.
pub fn hbk_estimate(spec: &ElementaryDomainSpec, z: [Complex64; 2], dmax: i64, budget: &Budget, seed: u64) -> Result<Vec<(u32, f64)>> {
    Ok(KernelSeries::new(spec, dmax, budget, seed)?.hbk(z))
}

/// CSV with one row per `(direction, |λ|, D_max)`.
pub fn ray_csv(samples: &[KernelRaySample]) -> String {
    let mut out = String::from("z1_re,z1_im,z2_re,z2_im,radius,dmax,partial_sum\n");
    for s in samples {
        let [a, b] = s.direction;
        for (r, sums) in s.radii.iter().zip(&s.cumulative) {
            for (d, v) in sums.iter().enumerate() {
                writeln!(out, "{},{},{},{},{},{},{:e}", a.re, a.im, b.re, b.im, r, d, v).expect("string write");
            }
        }
    }
    out
}

/// CSV with one row per `(d, j)`: the monomial coefficients of `P_{d,j}`
/// as `re:im` pairs separated by `;`, lowest power of `z₁` first.
pub fn basis_csv(bases: &[DegreeBasis]) -> String {
    let mut out = String::from("degree,index,condition,coefficients\n");
    for b in bases {
        for (j, coeffs) in b.orthonormal_polys().iter().enumerate() {
            let joined: Vec<String> = coeffs.iter().map(|c| format!("{:e}:{:e}", c.re, c.im)).collect();
            writeln!(out, "{},{},{:e},{}", b.degree, j, b.condition, joined.join(";")).expect("string write");
        }
    }
    out
}
