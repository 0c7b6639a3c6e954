//! The numerical L² oracle: local exponents at the singular loci, then the
//! norm itself with both integration strategies.
//!
//! `cargo run --release --example numeric_oracle`

use balanced_bergman::algebra::lelong_spectrum;
use balanced_bergman::domain::{ElementaryDomainSpec, HomogeneousPolynomial};
use balanced_bergman::oracle::{local_exponent, radial_integral_with, Budget, HartogsSlice, Locus, Strategy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let budget = Budget::default();
    let spec = ElementaryDomainSpec::from_json(include_str!("three_lines.json"))?;
    let slice = HartogsSlice::new(&spec);

    for text in ["1", "1,0", "0,-1,1,0"] {
        let q: HomogeneousPolynomial = text.parse()?;
        println!("Q = {q}");
        for (v, _) in lelong_spectrum(&spec).iter() {
            let fit = local_exponent(&q, &slice, &Locus::from_point(v), &budget)?;
            println!("  exponent at {v}: {:+.4}", fit.exponent);
        }
        for strategy in [Strategy::AdaptivePolar, Strategy::StratifiedMonteCarlo] {
            let v = radial_integral_with(&q, &slice, &budget, 1, strategy)?;
            println!("  {strategy:?}: {}", v.summary());
        }
    }

    // closed form of the volume: π²/2 · (Γ(1/3)/Γ(2/3))³
    println!("reference volume ≈ 38.2104");
    Ok(())
}
