use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::GaussianRational;
use crate::error::{Error, Result};

/// A point `[v1:v2]` of the projective line with Gaussian-rational
/// coordinates, stored in canonical form: `v2 = 1` when `v2 != 0`, otherwise
/// the point at infinity `[1:0]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    v1: GaussianRational,
    v2: GaussianRational,
}

impl ProjectivePoint {
    pub fn new(v1: GaussianRational, v2: GaussianRational) -> Result<Self> {
        if v2.is_zero() {
            if v1.is_zero() {
                return Err(Error::ZeroPoint);
            }
            return Ok(Self::infinity());
        }
        let v1 = &v1 / &v2;
        Ok(Self {
            v1,
            v2: GaussianRational::one(),
        })
    }

    /// `[a:1]`.
    pub fn affine(a: GaussianRational) -> Self {
        Self {
            v1: a,
            v2: GaussianRational::one(),
        }
    }

    /// `[1:0]`.
    pub fn infinity() -> Self {
        Self {
            v1: GaussianRational::one(),
            v2: GaussianRational::zero(),
        }
    }

    pub fn v1(&self) -> &GaussianRational {
        &self.v1
    }

    pub fn v2(&self) -> &GaussianRational {
        &self.v2
    }

    pub fn is_infinity(&self) -> bool {
        self.v2.is_zero()
    }

    /// The coordinate `v1/v2` in the chart `v2 = 1`, if the point lies there.
    pub fn affine_coordinate(&self) -> Option<&GaussianRational> {
        (!self.is_infinity()).then_some(&self.v1)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.v1, self.v2)
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [&self.v1, &self.v2].serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProjectivePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [v1, v2] = <[GaussianRational; 2]>::deserialize(d)?;
        ProjectivePoint::new(v1, v2).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_forms() {
        let p = ProjectivePoint::new(g("2"), g("4")).unwrap();
        assert_eq!(p, ProjectivePoint::affine(g("1/2")));
        assert_eq!(
            ProjectivePoint::new(g("3+i"), g("0")).unwrap(),
            ProjectivePoint::infinity()
        );
        assert_eq!(
            ProjectivePoint::new(g("i"), g("i")).unwrap(),
            ProjectivePoint::affine(g("1"))
        );
        assert!(ProjectivePoint::new(g("0"), g("0")).is_err());
        assert_eq!(ProjectivePoint::infinity().to_string(), "[1:0]");
    }

    #[test]
    fn json_round_trip() {
        let p = ProjectivePoint::affine(g("1/2-i"));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["1/2-1i","1"]"#);
        let q: ProjectivePoint = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
        let r: ProjectivePoint = serde_json::from_str(r#"["2","2"]"#).unwrap();
        assert_eq!(r, ProjectivePoint::affine(g("1")));
    }
}
