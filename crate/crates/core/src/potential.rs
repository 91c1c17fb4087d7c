//! Potentials of the form V(r) = Σ a(q)·sgn(q)·r^q + a(0)·ln r and the full
//! Hamiltonian description β√(m² + p²) + V(r).

use std::fmt;

use crate::error::{Error, Result};

/// Exponent of the Coulomb term.
pub const COULOMB: f64 = -1.0;

/// One power-law contribution a·sgn(q)·r^q.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTerm {
    pub q: f64,
    pub a: f64,
}

impl PowerTerm {
    pub fn new(q: f64, a: f64) -> Result<Self> {
        if !q.is_finite() || q == 0.0 {
            return Err(Error::domain(format!(
                "power exponent must be finite and non-zero, got {q} (use the log coefficient for q = 0)"
            )));
        }
        if q <= -2.0 {
            return Err(Error::UnsupportedTerm {
                q,
                reason: "exponents q <= -2 are not admissible",
            });
        }
        if !(a >= 0.0) || !a.is_finite() {
            return Err(Error::domain(format!(
                "coefficient must be non-negative, got {a}"
            )));
        }
        Ok(PowerTerm { q, a })
    }

    #[inline]
    pub fn value(&self, r: f64) -> f64 {
        self.a * self.q.signum() * r.powf(self.q)
    }

    pub fn is_coulomb(&self) -> bool {
        self.q == COULOMB
    }
}

/// Coefficients a(q) ≥ 0 of a sum of powers plus a log term.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialSum {
    power_terms: Vec<PowerTerm>,
    log_coefficient: f64,
}

impl PotentialSum {
    /// Zero coefficients are dropped; at least one must remain.
    pub fn new(power_terms: Vec<PowerTerm>, log_coefficient: f64) -> Result<Self> {
        if !(log_coefficient >= 0.0) || !log_coefficient.is_finite() {
            return Err(Error::domain(format!(
                "log coefficient must be non-negative, got {log_coefficient}"
            )));
        }
        let mut terms: Vec<PowerTerm> = Vec::with_capacity(power_terms.len());
        for t in power_terms {
            let t = PowerTerm::new(t.q, t.a)?;
            if t.a == 0.0 {
                continue;
            }
            if terms.iter().any(|u| u.q == t.q) {
                return Err(Error::domain(format!(
                    "duplicate term for exponent q = {}",
                    t.q
                )));
            }
            terms.push(t);
        }
        terms.sort_by(|x, y| x.q.total_cmp(&y.q));
        if terms.is_empty() && log_coefficient == 0.0 {
            return Err(Error::domain("potential coefficients are all zero"));
        }
        Ok(PotentialSum {
            power_terms: terms,
            log_coefficient,
        })
    }

    /// −a/r + b·ln r + c·r + d·r².
    pub fn from_coefficients(coulomb: f64, log: f64, linear: f64, quadratic: f64) -> Result<Self> {
        PotentialSum::new(
            vec![
                PowerTerm {
                    q: -1.0,
                    a: coulomb,
                },
                PowerTerm { q: 1.0, a: linear },
                PowerTerm {
                    q: 2.0,
                    a: quadratic,
                },
            ],
            log,
        )
    }

    /// sgn(q)·r^q with unit coefficient.
    pub fn pure_power(q: f64) -> Result<Self> {
        PotentialSum::new(vec![PowerTerm::new(q, 1.0)?], 0.0)
    }

    pub fn pure_log() -> Self {
        PotentialSum {
            power_terms: Vec::new(),
            log_coefficient: 1.0,
        }
    }

    pub fn power_terms(&self) -> &[PowerTerm] {
        &self.power_terms
    }

    pub fn log_coefficient(&self) -> f64 {
        self.log_coefficient
    }

    pub fn coulomb_coefficient(&self) -> f64 {
        self.power_terms
            .iter()
            .find(|t| t.is_coulomb())
            .map_or(0.0, |t| t.a)
    }

    /// Terms other than the Coulomb one, including the log term as q = 0.
    pub fn term_count(&self) -> usize {
        self.power_terms.len() + usize::from(self.log_coefficient > 0.0)
    }

    /// Some term grows without bound at large r.
    pub fn is_confining(&self) -> bool {
        self.log_coefficient > 0.0 || self.power_terms.iter().any(|t| t.q > 0.0)
    }

    pub fn is_pure_coulomb(&self) -> bool {
        self.log_coefficient == 0.0 && self.power_terms.iter().all(|t| t.is_coulomb())
    }

    pub fn value(&self, r: f64) -> f64 {
        let power: f64 = self.power_terms.iter().map(|t| t.value(r)).sum();
        if self.log_coefficient > 0.0 {
            power + self.log_coefficient * r.ln()
        } else {
            power
        }
    }

    /// Every coefficient multiplied by `c > 0`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !(c > 0.0) {
            return Err(Error::domain(format!(
                "scale factor must be positive, got {c}"
            )));
        }
        Ok(PotentialSum {
            power_terms: self
                .power_terms
                .iter()
                .map(|t| PowerTerm { q: t.q, a: t.a * c })
                .collect(),
            log_coefficient: self.log_coefficient * c,
        })
    }
}

impl fmt::Display for PotentialSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>, negative: bool| -> fmt::Result {
            let s = match (first, negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            f.write_str(s)
        };
        for t in &self.power_terms {
            sep(f, t.q < 0.0)?;
            write!(f, "{}*r^{}", t.a, t.q)?;
        }
        if self.log_coefficient > 0.0 {
            sep(f, false)?;
            write!(f, "{}*ln(r)", self.log_coefficient)?;
        }
        Ok(())
    }
}

/// H = β√(m² + p²) + V(r).
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub beta: f64,
    pub m: f64,
    pub potential: PotentialSum,
}

impl Problem {
    pub fn new(beta: f64, m: f64, potential: PotentialSum) -> Result<Self> {
        if !(beta > 0.0) || !beta.is_finite() {
            return Err(Error::domain(format!(
                "kinetic weight beta must be positive, got {beta}"
            )));
        }
        if !(m >= 0.0) || !m.is_finite() {
            return Err(Error::domain(format!("mass must be non-negative, got {m}")));
        }
        let v = potential.coulomb_coefficient() / beta;
        if v >= 0.5 {
            return Err(Error::CouplingTooLarge { v });
        }
        if !potential.is_confining() && !potential.is_pure_coulomb() {
            return Err(Error::domain(
                "potential needs a confining term (q > 0 or log) unless it is pure Coulomb",
            ));
        }
        Ok(Problem { beta, m, potential })
    }

    /// The Coulomb coupling v = a(−1)/β.
    pub fn coulomb_coupling(&self) -> f64 {
        self.potential.coulomb_coefficient() / self.beta
    }

    pub fn with_mass(&self, m: f64) -> Result<Self> {
        Problem::new(self.beta, m, self.potential.clone())
    }

    /// Kinetic energy β√(m² + p²) at momentum p.
    #[inline]
    pub fn kinetic(&self, p: f64) -> f64 {
        self.beta * self.m.hypot(p)
    }
}
