//! Blending a base domain with finite approximants of a domain whose zero
//! set is dense, and reading off the resulting regime.
//!
//! `cargo run --example siciak`

use balanced_bergman::algebra::{siciak_approximant, siciak_blend, GaussianRationalEnumeration, SiciakRegime, WeightSchedule};
use balanced_bergman::domain::ElementaryDomainSpec;
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let approx = siciak_approximant(6, GaussianRationalEnumeration::new(), &WeightSchedule::Uniform)?;
    println!("uniform approximant, 6 points: {approx}");

    let base = ElementaryDomainSpec::from_json(include_str!("two_axes.json"))?;
    for (n, d) in [(1, 1), (3, 4), (1, 2), (1, 4)] {
        let t = BigRational::new(BigInt::from(n), BigInt::from(d));
        let b = siciak_blend(Some(&base), 8, &t, None)?;
        println!("t = {t:<4} max ν = {:<5} {}", b.max_lelong, b.regime);
    }

    match siciak_blend(Some(&base), 8, &BigRational::from_integer(1.into()), Some(SiciakRegime::Metric)) {
        Ok(_) => println!("metric reached"),
        Err(e) => println!("metric target with t = 1: {e}"),
    }
    Ok(())
}
