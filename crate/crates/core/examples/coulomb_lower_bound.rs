//! The running Coulomb factor and the closed-form lower bound for
//! √(m² + p²) − v/r, including the coupling limit v < 1/2.

use salpeter_bounds::bounds::lower_bound;
use salpeter_bounds::kinetic::coulomb_running_p;
use salpeter_bounds::oracle::{salpeter_ground, OracleSettings};
use salpeter_bounds::{PotentialSum, Problem};

fn main() -> salpeter_bounds::Result<()> {
    println!(
        "{:>6} {:>12} {:>12} {:>12}",
        "v", "P_L(v)", "lower", "oracle"
    );
    for v in [0.05, 0.1, 0.2, 0.3, 0.4, 0.45] {
        let problem = Problem::new(1.0, 1.0, PotentialSum::pure_power(-1.0)?.scaled(v)?)?;
        let lower = lower_bound(&problem)?.value;
        let oracle = salpeter_ground(&problem, &OracleSettings::with_dim(40))?.energy;
        println!(
            "{v:>6.2} {:>12.9} {lower:>12.9} {oracle:>12.9}",
            coulomb_running_p(v)?
        );
    }
    let too_strong = PotentialSum::pure_power(-1.0)?.scaled(0.5)?;
    match Problem::new(1.0, 1.0, too_strong) {
        Ok(_) => println!("v = 0.5 unexpectedly accepted"),
        Err(e) => println!("v = 0.5 rejected: {e}"),
    }
    Ok(())
}
