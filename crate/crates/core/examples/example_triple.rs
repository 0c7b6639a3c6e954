//! The three reference domains and where each sits relative to the 1/2 and
//! 1/3 thresholds on the largest Lelong number.
//!
//! `cargo run --example example_triple`

use balanced_bergman::algebra::{admits_bergman_metric, kernel_positive, lelong_spectrum};
use balanced_bergman::domain::ElementaryDomainSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let domains = [
        ("|z1 z2|^(1/2)", include_str!("two_axes.json")),
        ("|z1 (z1-z2) z2|^(1/3)", include_str!("three_lines.json")),
        ("|z1 (z1-z2) (z1+z2) z2|^(1/4)", include_str!("four_lines.json")),
    ];
    println!("{:<32} {:>6} {:>8} {:>8}", "h", "max ν", "K(0)>0", "metric");
    for (name, json) in domains {
        let spec = ElementaryDomainSpec::from_json(json)?;
        let spectrum = lelong_spectrum(&spec);
        let (_, max_nu) = spectrum.max_entry().expect("nonempty spectrum");
        println!(
            "{name:<32} {max_nu:>6} {:>8} {:>8}",
            kernel_positive(&spec),
            admits_bergman_metric(&spec)
        );
    }
    Ok(())
}
