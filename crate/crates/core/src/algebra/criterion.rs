//! Square integrability of binary forms and the per-degree dimensions of
//! `H^d(D) = H^d ∩ L²(D)`.
//!
//! A form `Q` of degree `d` is square integrable on `D_h` exactly when at
//! every point `[v]` its vanishing order exceeds `ν(log h,[v])·(d+2) − 1`.
//! Since binary forms split into linear factors, prescribing vanishing
//! orders `μ_v` at distinct points leaves a free form of degree `d − Σμ_v`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::spectrum::lelong_spectrum;
use crate::domain::poly::taylor_shift;
use crate::domain::{ElementaryDomainSpec, HomogeneousPolynomial, ProjectivePoint};
use crate::error::{Error, Result};

/// Order of vanishing of `Q` at `[v]`.
///
/// Works in the chart `Q(λ, 1)` around `λ = v₁/v₂` when `|v₁| ≤ |v₂|`, and in
/// `Q(1, λ)` around `λ = v₂/v₁` otherwise.
pub fn multiplicity(q: &HomogeneousPolynomial, v: &ProjectivePoint) -> Result<u32> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (coeffs, root) = if v.v1().norm_sqr() <= v.v2().norm_sqr() {
        (q.dehomogenize_second(), v.v1() / v.v2())
    } else {
        (q.dehomogenize_first(), v.v2() / v.v1())
    };
    let shifted = taylor_shift(&coeffs, &root);
    let order = shifted
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial has a nonzero coefficient");
    Ok(order as u32)
}

/// Smallest integer `m ≥ 0` with `m > ν·(d+2) − 1`.
///
/// For `ν ≥ 0` this is `⌊ν·(d+2)⌋`; the inequality is strict, so when
/// `ν·(d+2) − 1` is an integer that integer itself does not qualify.
pub fn required_multiplicity(nu: &BigRational, d: u32) -> u32 {
    let bound = nu * BigRational::from_integer(BigInt::from(d) + 2) - BigRational::one();
    let m: BigInt = bound.floor().to_integer() + 1;
    if m.is_negative() {
        0
    } else {
        m.to_u32().expect("multiplicity fits in u32")
    }
}

/// Required vanishing order at each support point of the spectrum.
pub fn required_multiplicities(spec: &ElementaryDomainSpec, d: u32) -> Vec<(ProjectivePoint, u32)> {
    lelong_spectrum(spec)
        .iter()
        .map(|(p, nu)| (p.clone(), required_multiplicity(nu, d)))
        .collect()
}

pub fn is_square_integrable(q: &HomogeneousPolynomial, spec: &ElementaryDomainSpec) -> Result<bool> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = q.degree() as u32;
    for (v, nu) in lelong_spectrum(spec).iter() {
        if multiplicity(q, v)? < required_multiplicity(nu, d) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `dim H^d(D) = max(0, d + 1 − Σ_v μ_v(d))`.
pub fn hilbert_dimension(spec: &ElementaryDomainSpec, d: u32) -> u32 {
    let needed: u64 = required_multiplicities(spec, d)
        .iter()
        .map(|(_, m)| u64::from(*m))
        .sum();
    (u64::from(d) + 1).saturating_sub(needed) as u32
}

/// The polynomial `Π_v ℓ_v^{μ_v(d)}` that every element of `H^d(D)` is
/// divisible by.
pub fn vanishing_factor(spec: &ElementaryDomainSpec, d: u32) -> HomogeneousPolynomial {
    required_multiplicities(spec, d)
        .iter()
        .fold(HomogeneousPolynomial::one(), |acc, (v, m)| {
            acc.mul(&HomogeneousPolynomial::vanishing_at(v).pow(*m))
        })
}

/// An algebraic basis of `H^d(D)`: `Π_v ℓ_v^{μ_v} · z₁^k z₂^{r−k}` for
/// `k = 0..=r`, `r = d − Σμ_v`. Empty when the dimension is zero.
pub fn square_integrable_basis(spec: &ElementaryDomainSpec, d: u32) -> Vec<HomogeneousPolynomial> {
    let dim = hilbert_dimension(spec, d) as usize;
    if dim == 0 {
        return Vec::new();
    }
    let base = vanishing_factor(spec, d);
    let rest = dim - 1;
    (0..=rest)
        .map(|k| base.mul(&HomogeneousPolynomial::monomial(k, rest)))
        .collect()
}

/// Gap of the integrability inequality at `[v]`: `m(Q,v) − (ν(d+2) − 1)`.
/// Positive exactly where the local condition holds.
pub fn criterion_margin(q: &HomogeneousPolynomial, nu: &BigRational, v: &ProjectivePoint) -> Result<BigRational> {
    let m = multiplicity(q, v)?;
    let d = q.degree() as i64;
    Ok(BigRational::from_integer(BigInt::from(m))
        - (nu * BigRational::from_integer(BigInt::from(d + 2)) - BigRational::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{spec_from_points, GaussianRational, LinearForm};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn g(n: i64) -> Option<GaussianRational> {
        Some(GaussianRational::from_integer(n))
    }

    fn pt(n: i64) -> ProjectivePoint {
        ProjectivePoint::affine(GaussianRational::from_integer(n))
    }

    fn poly(s: &str) -> HomogeneousPolynomial {
        s.parse().unwrap()
    }

    fn three_lines() -> ElementaryDomainSpec {
        spec_from_points(&[(g(0), q(1, 3)), (g(1), q(1, 3)), (None, q(1, 3))]).unwrap()
    }

    fn four_lines() -> ElementaryDomainSpec {
        spec_from_points(&[(g(0), q(1, 4)), (g(1), q(1, 4)), (g(-1), q(1, 4)), (None, q(1, 4))]).unwrap()
    }

    fn two_axes() -> ElementaryDomainSpec {
        spec_from_points(&[(g(0), q(1, 2)), (None, q(1, 2))]).unwrap()
    }

    #[test]
    fn multiplicity_examples() {
        // z1
        assert_eq!(multiplicity(&poly("0,1"), &pt(0)).unwrap(), 1);
        // z1^2 z2
        assert_eq!(multiplicity(&poly("0,0,1,0"), &ProjectivePoint::infinity()).unwrap(), 1);
        // (z1 - z2)^3
        let cube = HomogeneousPolynomial::from_form(&LinearForm::through(&GaussianRational::one())).pow(3);
        assert_eq!(multiplicity(&cube, &pt(1)).unwrap(), 3);
        assert_eq!(multiplicity(&cube, &pt(2)).unwrap(), 0);
        assert!(matches!(
            multiplicity(&HomogeneousPolynomial::zero(2), &pt(0)),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn multiplicity_uses_far_chart_for_large_points() {
        // (z1 - 5 z2)^2 (z1 + z2) at [5:1] goes through the Q(1, λ) chart.
        let p = HomogeneousPolynomial::product_of_forms([
            (&LinearForm::through(&GaussianRational::from_integer(5)), 2),
            (&LinearForm::through(&GaussianRational::from_integer(-1)), 1),
        ]);
        assert_eq!(multiplicity(&p, &pt(5)).unwrap(), 2);
        assert_eq!(multiplicity(&p, &pt(-1)).unwrap(), 1);
        assert_eq!(multiplicity(&p, &ProjectivePoint::infinity()).unwrap(), 0);
    }

    #[test]
    fn required_multiplicity_examples() {
        assert_eq!(required_multiplicity(&q(1, 2), 0), 1);
        assert_eq!(required_multiplicity(&q(1, 3), 6), 2);
        for d in 0..20 {
            assert_eq!(required_multiplicity(&q(0, 1), d), 0);
        }
        // boundary: ν(d+2) − 1 = 1 is integral, so m = 1 does not qualify
        assert_eq!(required_multiplicity(&q(1, 2), 2), 2);
        assert_eq!(required_multiplicity(&q(1, 1), 0), 2);
    }

    #[test]
    fn square_integrability_examples() {
        assert!(!is_square_integrable(&HomogeneousPolynomial::one(), &two_axes()).unwrap());
        assert!(is_square_integrable(&HomogeneousPolynomial::one(), &three_lines()).unwrap());
        assert!(is_square_integrable(&poly("0,1"), &four_lines()).unwrap());
        assert!(!is_square_integrable(&poly("0,1"), &three_lines()).unwrap());
        assert!(matches!(
            is_square_integrable(&HomogeneousPolynomial::zero(1), &three_lines()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn dimension_examples() {
        let s = three_lines();
        assert_eq!(hilbert_dimension(&s, 0), 1);
        assert_eq!(hilbert_dimension(&s, 1), 0);
        assert_eq!(hilbert_dimension(&s, 6), 1);
        let basis = square_integrable_basis(&s, 6);
        assert_eq!(basis.len(), 1);
        // (z1 z2 (z1 - z2))^2 up to sign
        let expected = HomogeneousPolynomial::product_of_forms([
            (&LinearForm::z1(), 2),
            (&LinearForm::z2(), 2),
            (&LinearForm::through(&GaussianRational::one()), 2),
        ]);
        let ratio = &basis[0].coeffs()[2] / &expected.coeffs()[2];
        assert_eq!(basis[0], expected.scale(&ratio));
        assert!(square_integrable_basis(&s, 1).is_empty());
    }

    #[test]
    fn basis_members_pass_the_criterion() {
        let s = four_lines();
        for d in 0..30 {
            let basis = square_integrable_basis(&s, d);
            assert_eq!(basis.len() as u32, hilbert_dimension(&s, d));
            for p in &basis {
                assert_eq!(p.degree() as u32, d);
                assert!(is_square_integrable(p, &s).unwrap());
            }
        }
    }

    #[test]
    fn margin_sign_matches_criterion() {
        let s = three_lines();
        let one = HomogeneousPolynomial::one();
        for (v, nu) in lelong_spectrum(&s).iter() {
            assert_eq!(criterion_margin(&one, nu, v).unwrap(), q(1, 3));
        }
    }
}
