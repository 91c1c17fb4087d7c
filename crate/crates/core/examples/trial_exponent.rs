//! Upper bounds from the trial family e^{-α r^ν / 2}: a scan over ν and the
//! optimized value for the four-term potential.

use salpeter_bounds::bounds::{
    lower_bound, upper_bound, upper_bound_optimized, DEFAULT_NU_RANGE, DEFAULT_NU_STEPS,
};
use salpeter_bounds::{PotentialSum, Problem};

fn main() -> salpeter_bounds::Result<()> {
    let potential = PotentialSum::from_coefficients(0.1, 0.25, 0.25, 0.25)?;
    let problem = Problem::new(1.0, 1.0, potential)?;
    println!("H = sqrt(1 + p^2) + {}", problem.potential);
    for nu in [0.75, 1.0, 1.4, 1.6, 2.0, 2.5] {
        println!(
            "nu = {nu:<4} upper = {:.8}",
            upper_bound(&problem, nu)?.value
        );
    }
    let best = upper_bound_optimized(&problem, DEFAULT_NU_RANGE, DEFAULT_NU_STEPS)?;
    println!(
        "optimal nu = {:.5} upper = {:.8}",
        best.nu.unwrap_or(f64::NAN),
        best.value
    );
    println!("lower bound          = {:.8}", lower_bound(&problem)?.value);
    Ok(())
}
