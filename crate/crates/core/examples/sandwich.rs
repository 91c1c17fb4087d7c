//! Lower bound, Rayleigh–Ritz energy and trial-function upper bound for
//! √(m² + p²) − 0.1/r + 0.25r over a mass grid.
//!
//! Near m = 0 the Coulomb term's running factor stops bounding the
//! spectrum and the "lower" column rises above the variational energy.

use salpeter_bounds::bounds::{lower_bound, upper_bound};
use salpeter_bounds::oracle::{salpeter_ground, OracleSettings};
use salpeter_bounds::{PotentialSum, Problem};

fn main() -> salpeter_bounds::Result<()> {
    let potential = PotentialSum::from_coefficients(0.1, 0.0, 0.25, 0.0)?;
    let settings = OracleSettings::with_dim(25);
    println!("V = {potential}");
    println!(
        "{:>6} {:>12} {:>12} {:>12}  ordered",
        "m", "lower", "oracle", "upper"
    );
    for i in 0..=20 {
        let m = 0.5 * i as f64;
        let problem = Problem::new(1.0, m, potential.clone())?;
        let lower = lower_bound(&problem)?.value;
        let oracle = salpeter_ground(&problem, &settings)?.energy;
        let upper = upper_bound(&problem, 1.6)?.value;
        println!(
            "{m:>6.2} {lower:>12.8} {oracle:>12.8} {upper:>12.8}  {}",
            lower <= oracle && oracle <= upper
        );
    }
    Ok(())
}
