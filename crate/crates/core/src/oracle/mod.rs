//! Rayleigh–Ritz reference solver for the ground state of K + V.
//!
//! The Hamiltonian is diagonalized in a finite s-wave basis whose length
//! scale is optimized, so every energy reported here is a variational upper
//! estimate of the exact ground-state energy. It serves as the independent
//! check on the semiclassical bounds and supplies the component eigenvalues
//! E(q) behind the P-numbers.

mod basis;

pub use basis::{BasisFamily, Kinetic};

use crate::error::{Error, Result};
use crate::kinetic::CouplingCurve;
use crate::numerics::{minimize_from_seed, minimize_unimodal, symmetric_eigen_smallest, Bracket};
use crate::potential::{PotentialSum, Problem};

/// Basis size, scale and quadrature for a Rayleigh–Ritz solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleSettings {
    pub basis_dim: usize,
    /// Basis length scale; used as-is when `scale_auto` is off, and as a
    /// starting hint otherwise.
    pub scale: f64,
    pub scale_auto: bool,
    pub quadrature_order: usize,
}

impl Default for OracleSettings {
    fn default() -> Self {
        OracleSettings {
            basis_dim: 25,
            scale: 1.0,
            scale_auto: true,
            quadrature_order: 200,
        }
    }
}

impl OracleSettings {
    pub fn with_dim(basis_dim: usize) -> Self {
        OracleSettings {
            basis_dim,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(2..=128).contains(&self.basis_dim) {
            return Err(Error::domain(format!(
                "basis dimension must lie in [2, 128], got {}",
                self.basis_dim
            )));
        }
        if !(self.scale > 0.0) || !self.scale.is_finite() {
            return Err(Error::domain(format!(
                "basis scale must be positive, got {}",
                self.scale
            )));
        }
        if self.quadrature_order < 50 {
            return Err(Error::domain(format!(
                "quadrature order must be at least 50, got {}",
                self.quadrature_order
            )));
        }
        Ok(())
    }
}

/// Outcome of one ground-state solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralResult {
    pub energy: f64,
    /// E(basis_dim − 5) − E(basis_dim) at the same scale; non-negative by
    /// eigenvalue interlacing.
    pub residual: f64,
    /// Settings actually used, with `scale` set to the chosen scale.
    pub settings_used: OracleSettings,
    pub basis: BasisFamily,
}

/// Smallest eigenvalue of K + V in the given family at a fixed scale, plus
/// the eigenvalue of the leading `dim − 5` block.
fn solve_at_scale(
    family: BasisFamily,
    kinetic: Kinetic,
    potential: &dyn Fn(f64) -> f64,
    settings: &OracleSettings,
    scale: f64,
) -> Result<(f64, f64)> {
    let n = settings.basis_dim;
    let h = basis::hamiltonian(
        family,
        kinetic,
        potential,
        n,
        scale,
        settings.quadrature_order,
    )?;
    let (e, _) = symmetric_eigen_smallest(&h)?;
    let small = n.saturating_sub(5).max(1);
    let (e_small, _) = symmetric_eigen_smallest(&h.leading(small))?;
    Ok((e, e_small))
}

fn energy_at_scale(
    family: BasisFamily,
    kinetic: Kinetic,
    potential: &dyn Fn(f64) -> f64,
    settings: &OracleSettings,
    scale: f64,
) -> f64 {
    let n = settings.basis_dim;
    basis::hamiltonian(
        family,
        kinetic,
        potential,
        n,
        scale,
        settings.quadrature_order,
    )
    .and_then(|h| symmetric_eigen_smallest(&h))
    .map_or(f64::INFINITY, |(e, _)| e)
}

/// Log-spaced scan of the basis scale followed by golden-section refinement
/// around the best grid point.
fn optimize_scale(energy: impl Fn(f64) -> f64, seed: f64) -> f64 {
    const STEP: f64 = 0.25;
    const HALF_WIDTH: i32 = 16;
    let u0 = seed.ln();
    let mut grid: Vec<(f64, f64)> = (-HALF_WIDTH..=HALF_WIDTH)
        .map(|k| {
            let u = u0 + STEP * k as f64;
            (u, energy(u.exp()))
        })
        .collect();
    let argmin = |g: &[(f64, f64)]| {
        g.iter()
            .enumerate()
            .min_by(|a, b| a.1 .1.total_cmp(&b.1 .1))
            .map(|(i, _)| i)
            .unwrap_or(0)
    };
    let mut best = argmin(&grid);
    // walk outward while the minimum sits on the edge of the scan
    for _ in 0..40 {
        if best == 0 {
            let u = grid[0].0 - STEP;
            grid.insert(0, (u, energy(u.exp())));
        } else if best == grid.len() - 1 {
            let u = grid[best].0 + STEP;
            grid.push((u, energy(u.exp())));
        } else {
            break;
        }
        best = argmin(&grid);
    }
    if best == 0 || best == grid.len() - 1 {
        return grid[best].0.exp();
    }
    let (lo, mid, hi) = (grid[best - 1].0, grid[best].0, grid[best + 1].0);
    match Bracket::with_interior(lo.exp(), mid.exp(), hi.exp())
        .and_then(|b| minimize_unimodal(&energy, b, 1e-7))
    {
        Ok((scale, _)) => scale,
        Err(_) => mid.exp(),
    }
}

/// Radius minimizing K(1/r) + V(r); a natural length for the basis.
fn semiclassical_length(kinetic: Kinetic, potential: &dyn Fn(f64) -> f64) -> f64 {
    let objective = |r: f64| match kinetic {
        Kinetic::Schrodinger => 1.0 / (r * r) + potential(r),
        _ => kinetic.at(1.0 / r) + potential(r),
    };
    minimize_from_seed(objective, 1.0).map_or(1.0, |(r, _)| r)
}

/// Ground state of `kinetic + potential` in one basis family.
pub fn ground_state_in(
    family: BasisFamily,
    kinetic: Kinetic,
    potential: &dyn Fn(f64) -> f64,
    settings: &OracleSettings,
) -> Result<SpectralResult> {
    settings.validate()?;
    if family == BasisFamily::Laguerre && kinetic != Kinetic::Schrodinger {
        return Err(Error::domain(
            "the exponential basis only supports the Schrodinger kinetic energy",
        ));
    }
    let scale = if settings.scale_auto {
        let length = semiclassical_length(kinetic, potential);
        let seed = match family {
            BasisFamily::Oscillator => length,
            BasisFamily::Laguerre => 0.5 * length,
        };
        optimize_scale(
            |b| energy_at_scale(family, kinetic, potential, settings, b),
            seed,
        )
    } else {
        settings.scale
    };
    let (energy, e_small) = solve_at_scale(family, kinetic, potential, settings, scale)?;
    Ok(SpectralResult {
        energy,
        residual: (e_small - energy).max(0.0),
        settings_used: OracleSettings { scale, ..*settings },
        basis: family,
    })
}

/// Ground state of `kinetic + potential` for an arbitrary radial potential.
///
/// For K = p² both basis families are tried and the lower (still
/// variational) energy is kept; other kinetic operators use the oscillator
/// basis.
pub fn ground_state(
    kinetic: Kinetic,
    potential: &dyn Fn(f64) -> f64,
    settings: &OracleSettings,
) -> Result<SpectralResult> {
    let osc = ground_state_in(BasisFamily::Oscillator, kinetic, potential, settings)?;
    if kinetic != Kinetic::Schrodinger {
        return Ok(osc);
    }
    let lag = ground_state_in(BasisFamily::Laguerre, kinetic, potential, settings)?;
    Ok(if lag.energy < osc.energy { lag } else { osc })
}

/// Ground state of p² + v·V(r).
pub fn schrodinger_ground(
    potential: &PotentialSum,
    v_overall: f64,
    settings: &OracleSettings,
) -> Result<SpectralResult> {
    if !(v_overall > 0.0) || !v_overall.is_finite() {
        return Err(Error::domain(format!(
            "coupling must be positive, got {v_overall}"
        )));
    }
    ground_state(
        Kinetic::Schrodinger,
        &|r| v_overall * potential.value(r),
        settings,
    )
}

fn check_relativistic_terms(potential: &PotentialSum, coulomb_coupling: f64) -> Result<()> {
    if let Some(t) = potential.power_terms().iter().find(|t| t.q < -1.0) {
        return Err(Error::UnsupportedTerm {
            q: t.q,
            reason: "relativistic kinetic energy cannot bind r^q with q < -1",
        });
    }
    if coulomb_coupling >= 0.5 {
        return Err(Error::CouplingTooLarge {
            v: coulomb_coupling,
        });
    }
    Ok(())
}

/// Ground state of p + V(r).
pub fn ultrarelativistic_ground(
    potential: &PotentialSum,
    settings: &OracleSettings,
) -> Result<SpectralResult> {
    if potential.is_pure_coulomb() {
        return Err(Error::NoDiscreteSpectrum(
            "p - v/r has no discrete eigenvalues".into(),
        ));
    }
    check_relativistic_terms(potential, potential.coulomb_coefficient())?;
    ground_state(
        Kinetic::Ultrarelativistic,
        &|r| potential.value(r),
        settings,
    )
}

/// Ground state of β√(m² + p²) + V(r).
pub fn salpeter_ground(problem: &Problem, settings: &OracleSettings) -> Result<SpectralResult> {
    check_relativistic_terms(&problem.potential, problem.coulomb_coupling())?;
    if problem.m == 0.0 && problem.potential.is_pure_coulomb() {
        return Err(Error::NoDiscreteSpectrum(
            "massless kinetic energy with a pure Coulomb potential has no discrete eigenvalues"
                .into(),
        ));
    }
    ground_state(
        Kinetic::Salpeter {
            mass: problem.m,
            beta: problem.beta,
        },
        &|r| problem.potential.value(r),
        settings,
    )
}

/// Samples F(v), the ground energy of K + v·h(r), on a grid of couplings.
pub fn coupling_curve(
    kinetic: Kinetic,
    base: &PotentialSum,
    v_grid: &[f64],
    settings: &OracleSettings,
) -> Result<CouplingCurve> {
    let mut samples = Vec::with_capacity(v_grid.len());
    for &v in v_grid {
        if !(v > 0.0) {
            return Err(Error::domain(format!(
                "couplings must be positive, got {v}"
            )));
        }
        let energy = match kinetic {
            Kinetic::Schrodinger => schrodinger_ground(base, v, settings)?.energy,
            Kinetic::Ultrarelativistic => {
                ultrarelativistic_ground(&base.scaled(v)?, settings)?.energy
            }
            Kinetic::Salpeter { mass, beta } => {
                let problem = Problem::new(beta, mass, base.scaled(v)?)?;
                salpeter_ground(&problem, settings)?.energy
            }
        };
        samples.push((v, energy));
    }
    CouplingCurve::new(samples)
}
