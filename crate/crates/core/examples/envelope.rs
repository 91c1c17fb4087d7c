//! Envelope bounds for a transformed linear potential v·W(r): convex W gives
//! a lower bound, concave W an upper bound.

use salpeter_bounds::bounds::{envelope_lower_convex, envelope_upper_concave, Shape};
use salpeter_bounds::oracle::{ground_state, Kinetic, OracleSettings};

fn main() -> salpeter_bounds::Result<()> {
    let settings = OracleSettings::default();
    let kinetic = Kinetic::Salpeter {
        mass: 1.0,
        beta: 1.0,
    };

    let cosh = |r: f64| r.cosh() - 1.0;
    let lower = envelope_lower_convex(1.0, 1.0, 1.0, &cosh, Shape::Convex)?;
    let oracle = ground_state(kinetic, &cosh, &settings)?.energy;
    println!(
        "W = cosh r - 1: lower {:.8} <= oracle {oracle:.8}",
        lower.value
    );

    let sqrt = |r: f64| r.sqrt();
    let upper = envelope_upper_concave(1.0, 1.0, 1.0, &sqrt, Shape::Concave)?;
    let oracle = ground_state(kinetic, &sqrt, &settings)?.energy;
    println!(
        "W = sqrt r:     oracle {oracle:.8} <= upper {:.8}",
        upper.value
    );

    if let Err(e) = envelope_lower_convex(1.0, 1.0, 1.0, &sqrt, Shape::Concave) {
        println!("concave W refused for the lower bound: {e}");
    }
    Ok(())
}
