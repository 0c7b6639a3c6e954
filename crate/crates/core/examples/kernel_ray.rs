//! Bergman kernel partial sums along a ray and the degree-wise roots that
//! approximate the indicatrix.
//!
//! `cargo run --release --example kernel_ray`

use balanced_bergman::domain::{evaluate_h, ElementaryDomainSpec};
use balanced_bergman::kernel::{ray_csv, KernelSeries};
use balanced_bergman::oracle::Budget;
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = ElementaryDomainSpec::from_json(include_str!("four_lines.json"))?;
    let series = KernelSeries::new(&spec, 16, &Budget::default(), 0)?;
    for b in series.bases() {
        if b.rank() > 0 {
            println!("d = {:>2}: rank {}, Gram condition {:.2e}", b.degree, b.rank(), b.condition);
        }
    }

    let direction = [Complex64::new(1.0, 0.5), Complex64::new(2.0, 0.0)];
    let sample = series.ray(direction, &[0.0, 0.5, 0.9])?;
    print!("{}", ray_csv(&[sample]));

    let z = [Complex64::new(0.3, 0.1), Complex64::new(0.5, 0.0)];
    println!("h(z) = {:.5}", evaluate_h(&spec, z));
    for (d, root) in series.hbk(z) {
        println!("  K_{d}(z)^(1/2d) = {root:.5}");
    }
    Ok(())
}
