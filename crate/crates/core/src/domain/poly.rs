use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{GaussianRational, LinearForm, ProjectivePoint};
use crate::error::{Error, Result};

/// A binary form `Q(z) = Σ_k c_k z₁^k z₂^(d−k)` of declared degree `d`.
///
/// The zero polynomial is allowed (all coefficients zero) and keeps its
/// declared degree.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct HomogeneousPolynomial {
    coeffs: Vec<GaussianRational>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    degree: usize,
    coeffs: Vec<GaussianRational>,
}

impl TryFrom<PolyRepr> for HomogeneousPolynomial {
    type Error = Error;
    fn try_from(r: PolyRepr) -> Result<Self> {
        Self::with_degree(r.degree, r.coeffs)
    }
}

impl From<HomogeneousPolynomial> for PolyRepr {
    fn from(p: HomogeneousPolynomial) -> Self {
        PolyRepr {
            degree: p.degree(),
            coeffs: p.coeffs,
        }
    }
}

impl HomogeneousPolynomial {
    /// Coefficients `c_0..=c_d`, with `c_k` multiplying `z₁^k z₂^(d−k)`.
    pub fn new(coeffs: Vec<GaussianRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::CoefficientCount {
                degree: 0,
                expected: 1,
                actual: 0,
            });
        }
        Ok(Self { coeffs })
    }

    pub fn with_degree(degree: usize, coeffs: Vec<GaussianRational>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::CoefficientCount {
                degree,
                expected: degree + 1,
                actual: coeffs.len(),
            });
        }
        Ok(Self { coeffs })
    }

    pub fn zero(degree: usize) -> Self {
        Self {
            coeffs: vec![GaussianRational::zero(); degree + 1],
        }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![GaussianRational::one()],
        }
    }

    /// `z₁^k z₂^(d−k)`.
    pub fn monomial(k: usize, degree: usize) -> Self {
        assert!(k <= degree, "monomial exponent exceeds degree");
        let mut p = Self::zero(degree);
        p.coeffs[k] = GaussianRational::one();
        p
    }

    pub fn from_form(form: &LinearForm) -> Self {
        Self {
            coeffs: vec![form.b().clone(), form.a().clone()],
        }
    }

    /// `v₂z₁ − v₁z₂`, the form vanishing exactly at `[v]`.
    pub fn vanishing_at(v: &ProjectivePoint) -> Self {
        Self {
            coeffs: vec![-v.v1(), v.v2().clone()],
        }
    }

    /// Product of linear factors, `Π (a z₁ + b z₂)^e`.
    pub fn product_of_forms<'a, I>(factors: I) -> Self
    where
        I: IntoIterator<Item = (&'a LinearForm, u32)>,
    {
        factors.into_iter().fold(Self::one(), |acc, (f, e)| {
            acc.mul(&Self::from_form(f).pow(e))
        })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Sum of two forms of the same degree.
    pub fn add(&self, other: &Self) -> Option<Self> {
        (self.degree() == other.degree()).then(|| Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, z: [Complex64; 2]) -> Complex64 {
        // Homogeneous Horner: acc ← acc·z1 + c_k·z2^(d−k), k = d−1..0.
        let mut coeffs = self.coeffs.iter().rev();
        let mut acc = coeffs.next().expect("nonempty").to_complex();
        let mut z2_pow = Complex64::new(1.0, 0.0);
        for c in coeffs {
            z2_pow *= z[1];
            acc = acc * z[0] + c.to_complex() * z2_pow;
        }
        acc
    }

    pub fn eval_exact(&self, z1: &GaussianRational, z2: &GaussianRational) -> GaussianRational {
        let d = self.degree() as u32;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(GaussianRational::zero(), |acc, (k, c)| {
                acc + c * &z1.pow(k as u32) * z2.pow(d - k as u32)
            })
    }

    /// Coefficients of `Q(w, 1)` in increasing powers of `w`.
    pub fn dehomogenize_second(&self) -> Vec<GaussianRational> {
        self.coeffs.clone()
    }

    /// Coefficients of `Q(1, u)` in increasing powers of `u`.
    pub fn dehomogenize_first(&self) -> Vec<GaussianRational> {
        self.coeffs.iter().rev().cloned().collect()
    }
}

impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            match k {
                0 => {}
                1 => write!(f, "·z1")?,
                _ => write!(f, "·z1^{k}")?,
            }
            match d - k {
                0 => {}
                1 => write!(f, "·z2")?,
                e => write!(f, "·z2^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomogeneousPolynomial[d={}]({self})", self.degree())
    }
}

impl std::str::FromStr for HomogeneousPolynomial {
    type Err = Error;

    /// Comma-separated coefficients `c_0,c_1,…,c_d`.
    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<GaussianRational>>>()?;
        Self::new(coeffs)
    }
}

#[cfg(test)]
/// Evaluates a univariate polynomial given by increasing coefficients.
pub(crate) fn horner_exact(coeffs: &[GaussianRational], x: &GaussianRational) -> GaussianRational {
    coeffs
        .iter()
        .rev()
        .fold(GaussianRational::zero(), |acc, c| acc * x + c)
}

/// Coefficients of `p(x + shift)` in increasing powers of `x`.
pub(crate) fn taylor_shift(coeffs: &[GaussianRational], shift: &GaussianRational) -> Vec<GaussianRational> {
    let mut a = coeffs.to_vec();
    let n = a.len();
    if shift.is_zero() {
        return a;
    }
    for i in 0..n {
        for k in (i..n.saturating_sub(1)).rev() {
            let t = &a[k + 1] * shift;
            a[k] += &t;
        }
    }
    a
}
