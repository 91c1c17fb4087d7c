//! Summed component kinetic potentials against the Rayleigh–Ritz energy.

use salpeter_bounds::bounds::sum_subadditivity_check;
use salpeter_bounds::oracle::OracleSettings;
use salpeter_bounds::{PotentialSum, Problem};

fn main() -> salpeter_bounds::Result<()> {
    let problem = Problem::new(
        1.0,
        1.0,
        PotentialSum::from_coefficients(0.1, 0.0, 0.25, 0.0)?,
    )?;
    let s_grid: Vec<f64> = (1..=8).map(|i| 0.25 * i as f64).collect();
    let report = sum_subadditivity_check(&problem, &s_grid, &OracleSettings::default())?;
    println!(
        "{:>6} {:>10} {:>22} {:>10}",
        "s", "kinetic", "components", "total"
    );
    for sample in &report.samples {
        let parts: Vec<String> = sample
            .components
            .iter()
            .map(|c| format!("{c:.5}"))
            .collect();
        println!(
            "{:>6.2} {:>10.6} {:>22} {:>10.6}",
            sample.s,
            sample.kinetic,
            parts.join(" "),
            sample.total
        );
    }
    println!(
        "bound {:.8}  oracle {:.8}  margin {:.2e}",
        report.bound, report.oracle, report.margin
    );
    Ok(())
}
