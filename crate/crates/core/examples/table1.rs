//! Recomputes the unit-coupling eigenvalues of p + sgn(q)r^q and
//! p² + sgn(q)r^q for q = -1, 0 (log), 1, 2 and the P-numbers built from
//! them, next to the published reference values.

use salpeter_bounds::kinetic::{p_log, p_lower, p_schrodinger, PKind, TABLE1};
use salpeter_bounds::oracle::{schrodinger_ground, ultrarelativistic_ground, OracleSettings};
use salpeter_bounds::PotentialSum;

fn main() -> salpeter_bounds::Result<()> {
    let settings = OracleSettings::default();
    println!(
        "{:>3} {:>12} {:>12} {:>12} {:>12}",
        "q", "E1", "P1", "E2", "P2"
    );
    for row in TABLE1 {
        let potential = if row.q == 0.0 {
            PotentialSum::pure_log()
        } else {
            PotentialSum::pure_power(row.q)?
        };
        let e2 = schrodinger_ground(&potential, 1.0, &settings)?.energy;
        let p2 = if row.q == 0.0 {
            p_log(PKind::Schrodinger, e2)?
        } else {
            p_schrodinger(row.q, e2)?
        };
        // p − 1/r has no discrete spectrum
        let (e1, p1) = if row.e1.is_some() {
            let e1 = ultrarelativistic_ground(&potential, &settings)?.energy;
            let p1 = if row.q == 0.0 {
                p_log(PKind::RelativisticLower, e1)?
            } else {
                p_lower(row.q, e1)?
            };
            (format!("{e1:.7}"), format!("{p1:.7}"))
        } else {
            ("-".into(), "-".into())
        };
        println!("{:>3} {e1:>12} {p1:>12} {e2:>12.7} {p2:>12.7}", row.q);
        let fmt = |x: Option<f64>| x.map_or("-".to_string(), |v| v.to_string());
        println!(
            "{:>3} {:>12} {:>12} {:>12} {:>12}   (reference)",
            "",
            fmt(row.e1),
            fmt(row.p1),
            row.e2,
            row.p2
        );
    }
    Ok(())
}
