use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::gaussian::rational_string;
use super::{GaussianRational, ProjectivePoint};
use crate::error::{Error, Result};

/// The linear form `z ↦ a·z₁ + b·z₂`, normalized so its first nonzero
/// coefficient is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    a: GaussianRational,
    b: GaussianRational,
}

impl LinearForm {
    pub fn new(a: GaussianRational, b: GaussianRational) -> Result<Self> {
        if a.is_zero() {
            if b.is_zero() {
                return Err(Error::ZeroForm);
            }
            return Ok(Self {
                a,
                b: GaussianRational::one(),
            });
        }
        let b = &b / &a;
        Ok(Self {
            a: GaussianRational::one(),
            b,
        })
    }

    /// `z₁ − c·z₂`, vanishing at `[c:1]`.
    pub fn through(c: &GaussianRational) -> Self {
        Self {
            a: GaussianRational::one(),
            b: -c,
        }
    }

    pub fn z1() -> Self {
        Self::through(&GaussianRational::zero())
    }

    pub fn z2() -> Self {
        Self {
            a: GaussianRational::zero(),
            b: GaussianRational::one(),
        }
    }

    pub fn a(&self) -> &GaussianRational {
        &self.a
    }

    pub fn b(&self) -> &GaussianRational {
        &self.b
    }

    /// Exact proportionality test `a₁b₂ − a₂b₁ = 0`.
    pub fn is_proportional(&self, other: &LinearForm) -> bool {
        (&self.a * &other.b - &other.a * &self.b).is_zero()
    }

    /// The unique projective point where the form vanishes.
    pub fn zero_point(&self) -> ProjectivePoint {
        ProjectivePoint::new(self.b.clone(), -&self.a).expect("form is nonzero")
    }

    pub fn eval(&self, z: [Complex64; 2]) -> Complex64 {
        self.a.to_complex() * z[0] + self.b.to_complex() * z[1]
    }

    pub fn eval_exact(&self, z1: &GaussianRational, z2: &GaussianRational) -> GaussianRational {
        &self.a * z1 + &self.b * z2
    }
}

/// Free-function form of [`LinearForm::zero_point`].
pub fn zero_point(form: &LinearForm) -> ProjectivePoint {
    form.zero_point()
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})z1 + ({})z2", self.a, self.b)
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for LinearForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [&self.a, &self.b].serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinearForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[GaussianRational; 2]>::deserialize(d)?;
        LinearForm::new(a, b).map_err(serde::de::Error::custom)
    }
}

/// One factor `|A z|^t` of `h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedFactor {
    pub form: LinearForm,
    #[serde(with = "rational_string")]
    pub weight: BigRational,
}

impl WeightedFactor {
    pub fn new(form: LinearForm, weight: BigRational) -> Result<Self> {
        if !weight.is_positive() {
            return Err(Error::NonPositiveWeight(weight));
        }
        Ok(Self { form, weight })
    }
}
