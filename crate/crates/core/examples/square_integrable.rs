//! Deciding membership of single forms and listing the slice dimensions.
//!
//! `cargo run --example square_integrable`

use balanced_bergman::algebra::{
    hilbert_dimension, is_square_integrable, lelong_spectrum, multiplicity, required_multiplicity,
    square_integrable_basis,
};
use balanced_bergman::domain::{ElementaryDomainSpec, HomogeneousPolynomial};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = ElementaryDomainSpec::from_json(include_str!("four_lines.json"))?;

    // z2, z1 z2 (z1 - z2), and z1^2 z2 (z1 - z2)(z1 + z2)
    for text in ["1,0", "0,-1,1,0", "0,0,-1,0,1,0"] {
        let q: HomogeneousPolynomial = text.parse()?;
        let d = q.degree() as u32;
        println!("Q = {q}");
        for (v, nu) in lelong_spectrum(&spec).iter() {
            println!(
                "  at {v}: m = {}, needs {}",
                multiplicity(&q, v)?,
                required_multiplicity(nu, d)
            );
        }
        println!("  square integrable: {}", is_square_integrable(&q, &spec)?);
    }

    let dims: Vec<u32> = (0..=12).map(|d| hilbert_dimension(&spec, d)).collect();
    println!("dim H^d, d = 0..12: {dims:?}");
    for q in square_integrable_basis(&spec, 5) {
        println!("  H^5 basis element: {q}");
    }
    Ok(())
}
