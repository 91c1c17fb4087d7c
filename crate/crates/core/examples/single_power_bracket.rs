//! Complementary bounds for H = √(m² + p²) + r as the mass grows.

use salpeter_bounds::bounds::theorem1_bounds;
use salpeter_bounds::{PotentialSum, Problem};

fn main() -> salpeter_bounds::Result<()> {
    let linear = PotentialSum::pure_power(1.0)?;
    println!("{:>6} {:>12} {:>12} {:>10}", "m", "lower", "upper", "gap");
    for i in 0..=20 {
        let m = 0.5 * i as f64;
        let (lower, upper) = theorem1_bounds(&Problem::new(1.0, m, linear.clone())?)?;
        println!(
            "{m:>6.2} {:>12.8} {:>12.8} {:>10.2e}",
            lower.value,
            upper.value,
            upper.value - lower.value
        );
    }
    Ok(())
}
