#![allow(dead_code)]

use balanced_bergman::domain::{spec_from_points, ElementaryDomainSpec, GaussianRational, ProjectivePoint};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use statrs::function::gamma::gamma;

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn gr(n: i64) -> GaussianRational {
    GaussianRational::from_integer(n)
}

/// Spec from `(affine point or None for infinity, weight numerator, denominator)`.
pub fn points_spec(points: &[(Option<i64>, i64, i64)]) -> ElementaryDomainSpec {
    let pts: Vec<_> = points.iter().map(|&(p, n, d)| (p.map(gr), q(n, d))).collect();
    spec_from_points(&pts).unwrap()
}

pub fn two_axes() -> ElementaryDomainSpec {
    points_spec(&[(Some(0), 1, 2), (None, 1, 2)])
}

pub fn three_lines() -> ElementaryDomainSpec {
    points_spec(&[(Some(0), 1, 3), (Some(1), 1, 3), (None, 1, 3)])
}

pub fn four_lines() -> ElementaryDomainSpec {
    points_spec(&[(Some(0), 1, 4), (Some(1), 1, 4), (Some(-1), 1, 4), (None, 1, 4)])
}

/// `∫_C |w|^{2a} |1 − w|^{2b} dA(w)` for `a, b > −1`, `a + b < −1`.
pub fn plane_beta_integral(a: f64, b: f64) -> f64 {
    std::f64::consts::PI * gamma(1.0 + a) * gamma(1.0 + b) * gamma(-1.0 - a - b)
        / (gamma(-a) * gamma(-b) * gamma(2.0 + a + b))
}

/// Candidate support points; `None` is `[1:0]`.
pub fn point_pool() -> Vec<Option<GaussianRational>> {
    vec![
        Some(gr(0)),
        Some(gr(1)),
        Some(gr(-1)),
        Some(GaussianRational::i()),
        Some(GaussianRational::from_ratio(1, 2)),
        Some(GaussianRational::from_parts(2, 1, 1, 1)),
        Some(GaussianRational::from_parts(-1, 3, 1, 1)),
        None,
    ]
}

/// Spec from `(pool index, weight part)` pairs; weights are the parts over
/// their sum, and repeated indices merge.
pub fn spec_from_parts(parts: &[(usize, i64)]) -> ElementaryDomainSpec {
    let pool = point_pool();
    let total: i64 = parts.iter().map(|p| p.1).sum();
    let pts: Vec<_> = parts.iter().map(|&(i, k)| (pool[i % pool.len()].clone(), q(k, total))).collect();
    spec_from_points(&pts).unwrap()
}

pub fn point_of(p: &Option<GaussianRational>) -> ProjectivePoint {
    match p {
        Some(c) => ProjectivePoint::affine(c.clone()),
        None => ProjectivePoint::infinity(),
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Rank of a matrix over the Gaussian rationals, by plain elimination.
pub fn exact_rank(mut rows: Vec<Vec<GaussianRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].checked_div(&pivot_row[col]).unwrap();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &(&f * p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Smallest `m ≥ 0` with `m > ν(d+2) − 1`, found by counting up.
pub fn least_admissible_order(nu: &BigRational, d: u32) -> u32 {
    let bound = nu * BigRational::from_integer(BigInt::from(d + 2)) - BigRational::one();
    (0u32..).find(|&m| BigRational::from_integer(BigInt::from(m)) > bound).unwrap()
}

/// `dim H^d` as `d + 1 − rank` of the linear vanishing conditions on the
/// coefficients `c_k` of `z₁^k z₂^{d−k}`: at `[c:1]` the Taylor coefficients
/// of `Q(w,1)` at `c` below order `m`, at `[1:0]` the top `m` coefficients.
pub fn brute_force_dimension(points: &[(Option<GaussianRational>, BigRational)], d: u32) -> u32 {
    let n = d as usize + 1;
    let mut rows = Vec::new();
    for (p, nu) in points {
        let m = least_admissible_order(nu, d) as usize;
        for j in 0..m.min(n) {
            let row = (0..n)
                .map(|k| match p {
                    None => if k == n - 1 - j { gr(1) } else { gr(0) },
                    Some(c) if k >= j => c.pow((k - j) as u32) * gr(binomial(k, j)),
                    Some(_) => gr(0),
                })
                .collect();
            rows.push(row);
        }
    }
    (n - exact_rank(rows)) as u32
}
