//! The Bergman space is either trivial or infinite dimensional; in the
//! second case the first nonempty degree is a witness.
//!
//! `cargo run --example dichotomy`

use balanced_bergman::algebra::{classify_bergman_space, square_integrable_basis, witness_search_bound};
use balanced_bergman::domain::{spec_from_points, GaussianRational};
use num_bigint::BigInt;
use num_rational::BigRational;

fn w(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = |s: &str| s.parse::<GaussianRational>().map(Some);
    let cases = vec![
        ("one line", vec![(g("0")?, w(1, 1))]),
        ("two lines", vec![(g("0")?, w(2, 7)), (g("1+i")?, w(5, 7))]),
        ("three lines, heavy at 0", vec![(g("0")?, w(5, 8)), (g("1")?, w(1, 4)), (None, w(1, 8))]),
        ("five lines", vec![(g("0")?, w(1, 5)), (g("1")?, w(1, 5)), (g("-1")?, w(1, 5)), (g("i")?, w(1, 5)), (None, w(1, 5))]),
    ];
    for (name, points) in cases {
        let spec = spec_from_points(&points)?;
        let c = classify_bergman_space(&spec)?;
        print!("{name:<26} {:?}", c.kind);
        if let Some(d) = c.witness_degree {
            let witness = &square_integrable_basis(&spec, d)[0];
            print!("  first degree {d} (bound {}): {witness}", witness_search_bound(&spec));
        }
        println!();
    }
    Ok(())
}
