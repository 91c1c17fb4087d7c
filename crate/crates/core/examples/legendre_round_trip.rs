//! Kinetic potential of p² + v·r obtained from the coupling curve by a
//! Legendre transform, then transformed back.

use salpeter_bounds::kinetic::{
    energy_from_kinetic_potential, geometric_grid, kinetic_potential_from_curve,
    schrodinger_p_number,
};
use salpeter_bounds::oracle::{coupling_curve, Kinetic, OracleSettings};
use salpeter_bounds::PotentialSum;

fn main() -> salpeter_bounds::Result<()> {
    let v_grid = geometric_grid(0.25, 4.0, 31)?;
    let curve = coupling_curve(
        Kinetic::Schrodinger,
        &PotentialSum::pure_power(1.0)?,
        &v_grid,
        &OracleSettings::default(),
    )?;
    let kinetic_potential = kinetic_potential_from_curve(&curve)?;
    println!("P2(1) = {:.7}", schrodinger_p_number(1.0)?);
    println!(
        "{:>8} {:>10} {:>10} {:>10} {:>10}",
        "v", "s", "hbar", "hbar*√s", "F error"
    );
    for (point, &(v, f)) in kinetic_potential.iter().zip(curve.samples()).step_by(3) {
        let back = energy_from_kinetic_potential(&kinetic_potential, v)?.energy;
        println!(
            "{v:>8.4} {:>10.6} {:>10.6} {:>10.7} {:>10.1e}",
            point.s,
            point.hbar,
            point.hbar * point.s.sqrt(),
            back - f
        );
    }
    Ok(())
}
