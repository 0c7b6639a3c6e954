//! Square-integrable homogeneous polynomials on two-dimensional elementary
//! balanced domains `D_h = {z ∈ C² : h(z) < 1}`, `h(z) = Π |A_j z|^{t_j}`.
//!
//! The crate has two independent routes to the same questions:
//!
//! * [`algebra`] decides everything exactly from Lelong numbers and vanishing
//!   orders: membership of a form in `L²(D)`, the dimension of each
//!   homogeneous slice, positivity of the Bergman kernel, existence of the
//!   Bergman metric, and the trivial/infinite-dimensional dichotomy.
//! * [`oracle`] integrates `|Q|²` over the domain numerically and detects
//!   divergence from the local growth of the integrand, without looking at
//!   the algebraic criterion.
//!
//! [`kernel`] builds orthonormal bases of the homogeneous slices from oracle
//! inner products and evaluates truncated Bergman kernel series. [`cli`]
//! holds the report types and commands behind the `balanced-bergman` binary.

pub mod algebra;
pub mod cli;
pub mod domain;
mod error;
pub mod kernel;
pub mod oracle;

pub use error::{Error, Result};
