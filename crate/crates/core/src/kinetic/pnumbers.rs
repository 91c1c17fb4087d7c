//! P-numbers: the factors that turn a component kinetic potential into the
//! form sgn(q)·(P·r)^q (or ln(P·r)) after the change of variable s → 1/r.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::numerics::{digamma, ln_gamma};
use crate::oracle::{schrodinger_ground, ultrarelativistic_ground, OracleSettings};
use crate::potential::{PotentialSum, COULOMB};

/// Which kinetic operator (or trial family) a set of P-numbers belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PKind {
    /// K = p, used for lower bounds.
    RelativisticLower,
    /// K = p².
    Schrodinger,
    /// Trial function e^{-α r^ν / 2}, used for upper bounds.
    Variational { nu: f64 },
}

/// `P⁽¹⁾(q) = |E/(1+q)|^{1+1/q}·|q|` from the v = 1 eigenvalue of p + sgn(q)r^q.
pub fn p_lower(q: f64, e1: f64) -> Result<f64> {
    if q == 0.0 || q <= -1.0 || !q.is_finite() {
        return Err(Error::domain(format!(
            "lower P-number needs q > -1 and q != 0, got {q}"
        )));
    }
    if !e1.is_finite() || e1 == 0.0 {
        return Err(Error::domain(format!(
            "component eigenvalue must be finite and non-zero, got {e1}"
        )));
    }
    if (q > 0.0) != (e1 > 0.0) {
        return Err(Error::domain(format!(
            "eigenvalue {e1} has the wrong sign for sgn(q) r^q with q = {q}"
        )));
    }
    Ok((e1 / (1.0 + q)).abs().powf(1.0 + 1.0 / q) * q.abs())
}

/// `P⁽²⁾(q) = |E/(1+q/2)|^{1/2+1/q}·|q/2|^{1/2}` from the v = 1 eigenvalue of
/// p² + sgn(q)r^q.
pub fn p_schrodinger(q: f64, e2: f64) -> Result<f64> {
    if q == 0.0 || q <= -2.0 || !q.is_finite() {
        return Err(Error::domain(format!(
            "Schrodinger P-number needs q > -2 and q != 0, got {q}"
        )));
    }
    if !e2.is_finite() || e2 == 0.0 {
        return Err(Error::domain(format!(
            "component eigenvalue must be finite and non-zero, got {e2}"
        )));
    }
    if (q > 0.0) != (e2 > 0.0) {
        return Err(Error::domain(format!(
            "eigenvalue {e2} has the wrong sign for sgn(q) r^q with q = {q}"
        )));
    }
    Ok((e2 / (1.0 + 0.5 * q)).abs().powf(0.5 + 1.0 / q) * (0.5 * q).abs().sqrt())
}

/// P(0) for the log potential from the v = 1 eigenvalue of K + ln r.
pub fn p_log(kind: PKind, e0: f64) -> Result<f64> {
    match kind {
        PKind::RelativisticLower => Ok((e0 - 1.0).exp()),
        PKind::Schrodinger => Ok((e0 - 0.5).exp() / std::f64::consts::SQRT_2),
        PKind::Variational { nu } => p_variational_log(nu),
    }
}

/// ln of (ν/2)·[Γ(2+1/ν)/Γ(3/ν)]^{1/2}, the kinetic part shared by 𝒫(ν,q).
fn variational_kinetic_ln(nu: f64) -> Result<f64> {
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(Error::domain(format!(
            "trial exponent nu must be positive, got {nu}"
        )));
    }
    Ok((0.5 * nu).ln() + 0.5 * (ln_gamma(2.0 + 1.0 / nu)? - ln_gamma(3.0 / nu)?))
}

/// Upper P-number 𝒫(ν, q) for the trial function e^{-α r^ν / 2}.
pub fn p_variational(nu: f64, q: f64) -> Result<f64> {
    if q == 0.0 {
        return p_variational_log(nu);
    }
    if q <= -3.0 || !q.is_finite() {
        return Err(Error::domain(format!(
            "variational P-number needs q > -3, got {q}"
        )));
    }
    let kinetic = variational_kinetic_ln(nu)?;
    let moment = (ln_gamma((q + 3.0) / nu)? - ln_gamma(3.0 / nu)?) / q;
    Ok((kinetic + moment).exp())
}

/// Upper P-number 𝒫(ν, 0) for the log potential.
pub fn p_variational_log(nu: f64) -> Result<f64> {
    let kinetic = variational_kinetic_ln(nu)?;
    Ok((kinetic + digamma(3.0 / nu)? / nu).exp())
}

fn check_coulomb_coupling(v: f64) -> Result<()> {
    if !(v >= 0.0) || !v.is_finite() {
        return Err(Error::domain(format!(
            "Coulomb coupling must be non-negative, got {v}"
        )));
    }
    if v >= 0.5 {
        return Err(Error::CouplingTooLarge { v });
    }
    Ok(())
}

/// Closed-form lower bound m·[(1 + √(1 − 4v²))/2]^{1/2} for √(m² + p²) − v/r.
pub fn coulomb_lower_energy(v: f64, m: f64) -> Result<f64> {
    Ok(m * coulomb_running_p(v)?)
}

/// The coupling-dependent Coulomb factor P_L(v) = e_L(v)/m.
pub fn coulomb_running_p(v: f64) -> Result<f64> {
    check_coulomb_coupling(v)?;
    Ok((0.5 * (1.0 + (1.0 - 4.0 * v * v).sqrt())).sqrt())
}

/// One row of the reference table of component eigenvalues at v = 1.
///
/// Eigenvalues for K = p are rounded down and those for K = p² rounded up,
/// so that P-numbers built from them stay on the safe side of each bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub q: f64,
    pub e1: Option<f64>,
    pub p1: Option<f64>,
    pub e2: f64,
    pub p2: f64,
}

/// Reference eigenvalues and P-numbers for q = −1, 0, 1, 2 as published.
pub const TABLE1: [TableRow; 4] = [
    TableRow {
        q: -1.0,
        e1: None,
        p1: None,
        e2: -0.25,
        p2: 1.0,
    },
    TableRow {
        q: 0.0,
        e1: Some(1.06365),
        p1: Some(1.0657),
        e2: 1.0443325,
        p2: 1.218669,
    },
    TableRow {
        q: 1.0,
        e1: Some(2.23225),
        p1: Some(1.2457),
        e2: 2.3381075,
        p2: 1.376084,
    },
    TableRow {
        q: 2.0,
        e1: Some(2.338107),
        p1: Some(1.366687),
        e2: 3.0,
        p2: 1.5,
    },
];

/// P⁽¹⁾(q) used by the lower bound for tabulated exponents.
///
/// For q = 2 the published P-number is inconsistent with its own eigenvalue
/// (2·(2.338107/3)^{3/2} = 1.3760832); the value derived from the rounded
/// eigenvalue is used, truncated so it stays a lower bound.
fn tabulated_lower(q: f64) -> Option<f64> {
    match q {
        0.0 => Some(1.0657),
        1.0 => Some(1.2457),
        2.0 => Some(1.376083),
        _ => None,
    }
}

fn tabulated_schrodinger(q: f64) -> Option<f64> {
    TABLE1.iter().find(|row| row.q == q).map(|row| row.p2)
}

type CacheKey = (u8, u64);

fn cache() -> &'static RwLock<HashMap<CacheKey, f64>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, f64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cached(key: CacheKey, compute: impl FnOnce() -> Result<f64>) -> Result<f64> {
    if let Some(&v) = cache().read().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return Ok(v);
    }
    let v = compute()?;
    cache()
        .write()
        .unwrap_or_else(|e| e.into_inner())
        .insert(key, v);
    Ok(v)
}

/// P⁽¹⁾(q) for any admissible q: tabulated, or computed from the oracle
/// eigenvalue of p + sgn(q)r^q and cached. `q = 0` is the log potential.
pub fn lower_p_number(q: f64) -> Result<f64> {
    if let Some(p) = tabulated_lower(q) {
        return Ok(p);
    }
    if q <= -1.0 {
        return Err(Error::MissingPNumber { q });
    }
    cached((1, q.to_bits()), || {
        let e1 =
            ultrarelativistic_ground(&PotentialSum::pure_power(q)?, &OracleSettings::default())?
                .energy;
        p_lower(q, e1)
    })
}

/// P⁽²⁾(q) for any admissible q: tabulated, or computed from the oracle
/// eigenvalue of p² + sgn(q)r^q and cached.
pub fn schrodinger_p_number(q: f64) -> Result<f64> {
    if let Some(p) = tabulated_schrodinger(q) {
        return Ok(p);
    }
    if q <= -2.0 {
        return Err(Error::MissingPNumber { q });
    }
    cached((2, q.to_bits()), || {
        let e2 = schrodinger_ground(
            &PotentialSum::pure_power(q)?,
            1.0,
            &OracleSettings::default(),
        )?
        .energy;
        p_schrodinger(q, e2)
    })
}

/// P-factors for every term of a potential, tagged with their kind.
#[derive(Debug, Clone, PartialEq)]
pub struct PNumberSet {
    pub kind: PKind,
    values: Vec<(f64, f64)>,
}

impl PNumberSet {
    pub fn from_values(kind: PKind, values: Vec<(f64, f64)>) -> Result<Self> {
        if let Some(&(q, p)) = values.iter().find(|(_, p)| !(*p > 0.0) || !p.is_finite()) {
            return Err(Error::domain(format!(
                "P-factor for q = {q} must be positive, got {p}"
            )));
        }
        Ok(PNumberSet { kind, values })
    }

    /// Lower P-numbers for every non-Coulomb term; the Coulomb term is
    /// handled through the running P_L(v).
    pub fn lower_for(potential: &PotentialSum) -> Result<Self> {
        let mut values = Vec::new();
        for t in potential.power_terms() {
            if t.q == COULOMB {
                continue;
            }
            if t.q < -1.0 {
                return Err(Error::UnsupportedTerm {
                    q: t.q,
                    reason: "the lower bound needs q > -1 (or the Coulomb term)",
                });
            }
            values.push((t.q, lower_p_number(t.q)?));
        }
        if potential.log_coefficient() > 0.0 {
            values.push((0.0, lower_p_number(0.0)?));
        }
        PNumberSet::from_values(PKind::RelativisticLower, values)
    }

    pub fn schrodinger_for(potential: &PotentialSum) -> Result<Self> {
        let mut values = Vec::new();
        for t in potential.power_terms() {
            values.push((t.q, schrodinger_p_number(t.q)?));
        }
        if potential.log_coefficient() > 0.0 {
            values.push((0.0, schrodinger_p_number(0.0)?));
        }
        PNumberSet::from_values(PKind::Schrodinger, values)
    }

    pub fn variational_for(nu: f64, potential: &PotentialSum) -> Result<Self> {
        let mut values = Vec::new();
        for t in potential.power_terms() {
            values.push((t.q, p_variational(nu, t.q)?));
        }
        if potential.log_coefficient() > 0.0 {
            values.push((0.0, p_variational_log(nu)?));
        }
        PNumberSet::from_values(PKind::Variational { nu }, values)
    }

    /// P-factor for exponent `q` (0 for the log term).
    pub fn get(&self, q: f64) -> Option<f64> {
        self.values.iter().find(|(k, _)| *k == q).map(|&(_, p)| p)
    }

    pub fn values(&self) -> &[(f64, f64)] {
        &self.values
    }
}
