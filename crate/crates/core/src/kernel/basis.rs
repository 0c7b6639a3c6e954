use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::algebra::square_integrable_basis;
use crate::domain::{ElementaryDomainSpec, GaussianRational, HomogeneousPolynomial};
use crate::error::{Error, Result};
use crate::oracle::{radial_integral, Budget, HartogsSlice};

/// Gram matrices with a larger condition number (after diagonal scaling)
/// are flagged.
pub const CONDITION_LIMIT: f64 = 1e10;

/// Pivots below this fraction of the unit diagonal end the factorization.
const PIVOT_TOL: f64 = 1e-12;

/// Orthonormal basis of one homogeneous slice `H^d(D)`.
///
/// `gram[(a, b)] = ∫_D conj(p_a) p_b`, and the columns of
/// `orthonormal_coeffs` express `P_{d,j} = Σ_a C[(a, j)] p_a` with
/// `Cᴴ · gram · C = I`. When the gram is numerically singular the columns
/// span only the independent part and `rank() < polys.len()`.
#[derive(Clone, Debug)]
pub struct DegreeBasis {
    pub degree: u32,
    pub polys: Vec<HomogeneousPolynomial>,
    pub gram: DMatrix<Complex64>,
    pub orthonormal_coeffs: DMatrix<Complex64>,
    /// Condition number of the diagonally scaled gram.
    pub condition: f64,
}

impl DegreeBasis {
    pub fn dimension(&self) -> usize {
        self.polys.len()
    }

    pub fn rank(&self) -> usize {
        self.orthonormal_coeffs.ncols()
    }

    pub fn ill_conditioned(&self) -> bool {
        self.condition > CONDITION_LIMIT
    }

    /// `P_{d,j}(z)` for each `j`.
    pub fn orthonormal_values(&self, z: [Complex64; 2]) -> Vec<Complex64> {
        let v: Vec<Complex64> = self.polys.iter().map(|p| p.eval(z)).collect();
        (0..self.rank())
            .map(|j| (0..v.len()).map(|a| self.orthonormal_coeffs[(a, j)] * v[a]).sum())
            .collect()
    }

    /// `Σ_j |P_{d,j}(z)|²`, the degree-`d` part of the Bergman kernel.
    pub fn slice_kernel(&self, z: [Complex64; 2]) -> f64 {
        self.orthonormal_values(z).iter().map(Complex64::norm_sqr).sum()
    }

    /// Coefficients of each `P_{d,j}` in the monomials `z₁^k z₂^{d−k}`.
    pub fn orthonormal_polys(&self) -> Vec<Vec<Complex64>> {
        let n = self.degree as usize + 1;
        (0..self.rank())
            .map(|j| {
                let mut c = vec![Complex64::new(0.0, 0.0); n];
                for (a, p) in self.polys.iter().enumerate() {
                    for (k, ck) in p.coeffs().iter().enumerate() {
                        c[k] += self.orthonormal_coeffs[(a, j)] * ck.to_complex();
                    }
                }
                c
            })
            .collect()
    }
}

fn norm_squared(p: &HomogeneousPolynomial, slice: &HartogsSlice, budget: &Budget, seed: u64, degree: u32) -> Result<f64> {
    let v = radial_integral(p, slice, budget, seed)?;
    match v.value {
        Some(x) if v.is_finite() => Ok(x),
        _ => Err(Error::BasisVerdict {
            degree,
            verdict: v.summary(),
        }),
    }
}

/// `∫ conj(p) q = ¼ Σ_k i^k ‖q + i^k p‖²`.
fn inner(p: &HomogeneousPolynomial, q: &HomogeneousPolynomial, slice: &HartogsSlice, budget: &Budget, seed: u64, degree: u32) -> Result<Complex64> {
    let units = [
        (GaussianRational::from_integer(1), Complex64::new(1.0, 0.0)),
        (GaussianRational::i(), Complex64::new(0.0, 1.0)),
        (GaussianRational::from_integer(-1), Complex64::new(-1.0, 0.0)),
        (-GaussianRational::i(), Complex64::new(0.0, -1.0)),
    ];
    let mut acc = Complex64::new(0.0, 0.0);
    for (exact, float) in units {
        let combo = q.add(&p.scale(&exact)).expect("same degree");
        acc += float * norm_squared(&combo, slice, budget, seed, degree)?;
    }
    Ok(0.25 * acc)
}

/// Pivoted Cholesky of a Hermitian positive-semidefinite matrix: returns the
/// pivot order and the lower factor `L` (rank × rank) of the leading
/// principal block in that order.
pub(crate) fn pivoted_cholesky(g: &DMatrix<Complex64>, tol: f64) -> (Vec<usize>, DMatrix<Complex64>) {
    let n = g.nrows();
    let mut a = g.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut rank = n;
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re))
            .expect("nonempty range");
        if a[(p, p)].re <= tol {
            rank = k;
            break;
        }
        a.swap_rows(k, p);
        a.swap_columns(k, p);
        perm.swap(k, p);
        let pivot = a[(k, k)].re.sqrt();
        a[(k, k)] = Complex64::new(pivot, 0.0);
        for i in k + 1..n {
            a[(i, k)] /= pivot;
        }
        for j in k + 1..n {
            for i in j..n {
                let update = a[(i, k)] * a[(j, k)].conj();
                a[(i, j)] -= update;
            }
            a[(j, j)].im = 0.0;
        }
        for j in k + 1..n {
            for i in j + 1..n {
                a[(j, i)] = a[(i, j)].conj();
            }
        }
    }
    perm.truncate(rank);
    let l = DMatrix::from_fn(rank, rank, |i, j| if i >= j { a[(i, j)] } else { Complex64::new(0.0, 0.0) });
    (perm, l)
}

/// Condition number `λ_max/λ_min` of a Hermitian matrix, `∞` when singular.
fn condition_number(g: &DMatrix<Complex64>) -> f64 {
    if g.nrows() == 0 {
        return 1.0;
    }
    let eig = SymmetricEigen::new(g.clone()).eigenvalues;
    let max = eig.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = eig.iter().cloned().fold(f64::INFINITY, f64::min);
    if min <= 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

/// Orthonormalizes the algebraic basis of `H^d(D)` against oracle inner
/// products. Errors when the oracle does not find a basis member finite.
pub fn degree_basis(spec: &ElementaryDomainSpec, d: u32, budget: &Budget, seed: u64) -> Result<DegreeBasis> {
    let polys = square_integrable_basis(spec, d);
    let slice = HartogsSlice::new(spec);
    let n = polys.len();
    let mut gram = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    for a in 0..n {
        gram[(a, a)] = Complex64::new(norm_squared(&polys[a], &slice, budget, seed, d)?, 0.0);
        for b in a + 1..n {
            let g = inner(&polys[a], &polys[b], &slice, budget, seed, d)?;
            gram[(a, b)] = g;
            gram[(b, a)] = g.conj();
        }
    }
    let scale: Vec<f64> = (0..n).map(|a| gram[(a, a)].re.sqrt().recip()).collect();
    let scaled = DMatrix::from_fn(n, n, |i, j| gram[(i, j)] * scale[i] * scale[j]);
    let condition = condition_number(&scaled);

    let (perm, l) = pivoted_cholesky(&scaled, PIVOT_TOL);
    let rank = perm.len();
    let identity = DMatrix::<Complex64>::identity(rank, rank);
    let upper = l
        .adjoint()
        .solve_upper_triangular(&identity)
        .expect("positive pivots give an invertible factor");
    let mut coeffs = DMatrix::from_element(n, rank, Complex64::new(0.0, 0.0));
    for (row, &a) in perm.iter().enumerate() {
        for j in 0..rank {
            coeffs[(a, j)] = upper[(row, j)] * scale[a];
        }
    }
    Ok(DegreeBasis {
        degree: d,
        polys,
        gram,
        orthonormal_coeffs: coeffs,
        condition,
    })
}
