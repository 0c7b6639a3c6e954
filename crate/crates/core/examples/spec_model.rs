//! Loading, canonicalizing and evaluating an elementary domain spec.
//!
//! `cargo run --example spec_model`

use balanced_bergman::domain::{canonicalize_spec, evaluate_h, ElementaryDomainSpec, GaussianRational, RawFactor};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = ElementaryDomainSpec::from_json(include_str!("three_lines.json"))?;
    println!("three lines: {spec}");

    // 2·z1 and z1 are the same line; weights merge and h changes by a constant factor only
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
    let merged = canonicalize_spec([
        RawFactor::new(GaussianRational::from_integer(2), GaussianRational::from_integer(0), quarter.clone()),
        RawFactor::new(GaussianRational::from_integer(1), GaussianRational::from_integer(0), quarter),
        RawFactor::new(GaussianRational::from_integer(0), "1+i".parse()?, half),
    ])?;
    println!("merged:      {merged}");
    println!("as JSON:     {}", merged.to_json());

    for z in [[1.0, 2.0], [0.5, 0.25], [0.0, 1.0]] {
        let z = [Complex64::new(z[0], 0.0), Complex64::new(z[1], 0.0)];
        println!("h({}, {}) = {:.6}", z[0], z[1], evaluate_h(&spec, z));
    }
    Ok(())
}
