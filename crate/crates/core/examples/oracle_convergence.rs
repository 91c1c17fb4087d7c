//! Rayleigh–Ritz convergence with basis size for the three kinetic
//! operators on V = r.

use salpeter_bounds::oracle::{ground_state, Kinetic, OracleSettings};

fn main() -> salpeter_bounds::Result<()> {
    let linear = |r: f64| r;
    for (name, kinetic) in [
        ("p^2", Kinetic::Schrodinger),
        ("p", Kinetic::Ultrarelativistic),
        (
            "sqrt(1 + p^2)",
            Kinetic::Salpeter {
                mass: 1.0,
                beta: 1.0,
            },
        ),
    ] {
        println!("K = {name}");
        for dim in [10, 20, 30, 45, 60] {
            let r = ground_state(kinetic, &linear, &OracleSettings::with_dim(dim))?;
            println!(
                "  N = {dim:>2}: E = {:.10}  residual {:.1e}  scale {:.4}  basis {:?}",
                r.energy, r.residual, r.settings_used.scale, r.basis
            );
        }
    }
    Ok(())
}
