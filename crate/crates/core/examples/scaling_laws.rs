//! Coupling curves F(v) sampled from the Rayleigh–Ritz solver and their
//! power-law exponents.

use salpeter_bounds::oracle::{coupling_curve, Kinetic, OracleSettings};
use salpeter_bounds::PotentialSum;

fn main() -> salpeter_bounds::Result<()> {
    let settings = OracleSettings::default();
    let grid = [0.5, 1.0, 2.0];
    for q in [1.0, 2.0] {
        let base = PotentialSum::pure_power(q)?;
        for (name, kinetic, expected) in [
            ("p^2", Kinetic::Schrodinger, 2.0 / (2.0 + q)),
            ("p", Kinetic::Ultrarelativistic, 1.0 / (1.0 + q)),
        ] {
            let k = coupling_curve(kinetic, &base, &grid, &settings)?.power_law_exponent()?;
            println!("K = {name:<3} V = r^{q}: exponent {k:.6} (expected {expected:.6})");
        }
    }
    let log = coupling_curve(
        Kinetic::Schrodinger,
        &PotentialSum::pure_log(),
        &grid,
        &settings,
    )?;
    let f1 = log.samples()[1].1;
    for &(v, f) in log.samples() {
        println!(
            "K = p^2 V = ln r: F({v}) = {f:.7}, vF(1) - v ln(v)/2 = {:.7}",
            v * f1 - 0.5 * v * v.ln()
        );
    }
    Ok(())
}
