//! Bergman kernel of `D_h` from its homogeneous expansion.
//!
//! Homogeneous polynomials of different degrees are orthogonal on a balanced
//! domain, so `K_D(z) = Σ_d K_d(z)` with `K_d(z) = Σ_j |P_{d,j}(z)|²` over an
//! orthonormal basis of `H^d(D)`, and `K_d(λz) = |λ|^{2d} K_d(z)`.

mod basis;
mod cross;
mod series;

pub use basis::{degree_basis, DegreeBasis, CONDITION_LIMIT};
pub use cross::{sampled_inner_product, SampledInner};
pub use series::{basis_csv, hbk_estimate, kernel_partial_sum, ray_csv, KernelRaySample, KernelSeries, DEFAULT_DMAX};
