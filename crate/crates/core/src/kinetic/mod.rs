//! Kinetic potentials: P-numbers for power and log components, the running
//! Coulomb factor, and the Legendre bridge between coupling curves F(v) and
//! kinetic potentials h̄(s).

mod legendre;
mod pnumbers;

pub use legendre::{
    energy_from_kinetic_potential, geometric_grid, kinetic_potential_from_curve, CouplingCurve,
    KineticPoint, LegendreEnergy, CONCAVITY_TOL,
};
pub use pnumbers::{
    coulomb_lower_energy, coulomb_running_p, lower_p_number, p_log, p_lower, p_schrodinger,
    p_variational, p_variational_log, schrodinger_p_number, PKind, PNumberSet, TableRow, TABLE1,
};
