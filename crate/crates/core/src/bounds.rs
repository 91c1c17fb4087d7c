//! Ground-state energy bounds in semiclassical form
//!
//! ```text
//! E ≈ min_r { β√(m² + 1/r²) + Σ a(q)·sgn(q)·(P(q)·r)^q + a(0)·ln(P(0)·r) }
//! ```
//!
//! With the lower P-numbers of K = p (and the running Coulomb factor) the
//! minimum is a lower bound; with the trial-function P-numbers 𝒫(ν, q) it is
//! an upper bound for every ν > 0.

use crate::error::{Error, Result};
use crate::kinetic::{coulomb_running_p, lower_p_number, schrodinger_p_number, PKind, PNumberSet};
use crate::numerics::{minimize_from_seed, minimize_unimodal, Bracket};
use crate::oracle::{salpeter_ground, OracleSettings};
use crate::potential::{Problem, COULOMB};

/// Which inequality produced a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundMethod {
    /// Sum of component kinetic potentials with K = p P-numbers.
    LowerSemiclassical,
    /// Variational trial function e^{-α r^ν / 2}.
    UpperTrialFamily,
    /// Single power, convexity of K in p.
    LowerSingleTerm,
    /// Single power, concavity of K in p².
    UpperSingleTerm,
    /// Convex transform of a linear base potential.
    LowerEnvelope,
    /// Concave transform of a linear base potential.
    UpperEnvelope,
}

impl BoundMethod {
    pub fn is_lower(self) -> bool {
        matches!(
            self,
            BoundMethod::LowerSemiclassical
                | BoundMethod::LowerSingleTerm
                | BoundMethod::LowerEnvelope
        )
    }
}

/// Where the semiclassical objective attains its minimum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Minimizer {
    Radius(f64),
    /// Evaluated in closed form (pure Coulomb); no numerical minimizer.
    AnalyticLimit,
}

impl Minimizer {
    pub fn radius(self) -> Option<f64> {
        match self {
            Minimizer::Radius(r) => Some(r),
            Minimizer::AnalyticLimit => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub value: f64,
    pub r_star: Minimizer,
    pub method: BoundMethod,
    pub nu: Option<f64>,
}

/// Default ν search range and grid size for [`upper_bound_optimized`].
pub const DEFAULT_NU_RANGE: (f64, f64) = (0.5, 3.0);
pub const DEFAULT_NU_STEPS: usize = 26;

/// The objective with its P-factors resolved, ready for repeated evaluation.
#[derive(Debug, Clone)]
struct Objective {
    beta: f64,
    m: f64,
    /// (signed coefficient a·sgn(q), q, P)
    powers: Vec<(f64, f64, f64)>,
    /// (a(0), P(0))
    log: Option<(f64, f64)>,
}

impl Objective {
    fn build(problem: &Problem, p_set: &PNumberSet) -> Result<Self> {
        let potential = &problem.potential;
        let mut powers = Vec::with_capacity(potential.power_terms().len());
        for t in potential.power_terms() {
            let p = if t.q == COULOMB && p_set.kind == PKind::RelativisticLower {
                // −a/(P_L(v)·r) with v = a/β
                coulomb_running_p(problem.coulomb_coupling())?
            } else {
                p_set.get(t.q).ok_or(Error::MissingPNumber { q: t.q })?
            };
            powers.push((t.a * t.q.signum(), t.q, p));
        }
        let log = if potential.log_coefficient() > 0.0 {
            let p = p_set.get(0.0).ok_or(Error::MissingPNumber { q: 0.0 })?;
            Some((potential.log_coefficient(), p))
        } else {
            None
        };
        Ok(Objective {
            beta: problem.beta,
            m: problem.m,
            powers,
            log,
        })
    }

    fn eval(&self, r: f64) -> f64 {
        let mut e = self.beta * self.m.hypot(1.0 / r);
        for &(c, q, p) in &self.powers {
            e += c * (p * r).powf(q);
        }
        if let Some((a, p)) = self.log {
            e += a * (p * r).ln();
        }
        e
    }

    /// Minimum over r, seeded at the kinetic length scale 1/max(m, 1).
    fn minimize(&self) -> Result<(f64, f64)> {
        minimize_from_seed(|r| self.eval(r), 1.0 / self.m.max(1.0))
    }
}

/// β√(m² + 1/r²) + Σ a(q)·sgn(q)·(P(q)·r)^q + a(0)·ln(P(0)·r) at radius `r`.
///
/// For a lower set the Coulomb term uses the running factor P_L(v).
pub fn semiclassical_objective(r: f64, problem: &Problem, p_set: &PNumberSet) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain(format!("radius must be positive, got {r}")));
    }
    Ok(Objective::build(problem, p_set)?.eval(r))
}

/// min over s of β(√(m² + s²) − k·s) for k < 1, i.e. β·m·√(1 − k²).
fn pure_coulomb_minimum(beta: f64, m: f64, k: f64) -> Result<f64> {
    if k >= 1.0 {
        return Err(Error::UnboundedObjective { expansions: 0 });
    }
    Ok(beta * m * (1.0 - k * k).sqrt())
}

/// Lower bound on the ground-state energy.
pub fn lower_bound(problem: &Problem) -> Result<BoundReport> {
    if let Some(t) = problem.potential.power_terms().iter().find(|t| t.q < -1.0) {
        return Err(Error::UnsupportedTerm {
            q: t.q,
            reason: "the lower bound needs q > -1 or the Coulomb term",
        });
    }
    let v = problem.coulomb_coupling();
    if v >= 0.5 {
        return Err(Error::CouplingTooLarge { v });
    }
    if problem.potential.is_pure_coulomb() {
        // β·e_L(v) with e_L = m·P_L(v)
        return Ok(BoundReport {
            value: problem.beta * problem.m * coulomb_running_p(v)?,
            r_star: Minimizer::AnalyticLimit,
            method: BoundMethod::LowerSemiclassical,
            nu: None,
        });
    }
    let p_set = PNumberSet::lower_for(&problem.potential)?;
    let (r, value) = Objective::build(problem, &p_set)?.minimize()?;
    Ok(BoundReport {
        value,
        r_star: Minimizer::Radius(r),
        method: BoundMethod::LowerSemiclassical,
        nu: None,
    })
}

/// Upper bound from the trial function e^{-α r^ν / 2} at fixed ν.
pub fn upper_bound(problem: &Problem, nu: f64) -> Result<BoundReport> {
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(Error::domain(format!(
            "trial exponent nu must be positive, got {nu}"
        )));
    }
    let p_set = PNumberSet::variational_for(nu, &problem.potential)?;
    if problem.potential.is_pure_coulomb() {
        let a = problem.potential.coulomb_coefficient();
        let p = p_set
            .get(COULOMB)
            .ok_or(Error::MissingPNumber { q: COULOMB })?;
        return Ok(BoundReport {
            value: pure_coulomb_minimum(problem.beta, problem.m, a / (problem.beta * p))?,
            r_star: Minimizer::AnalyticLimit,
            method: BoundMethod::UpperTrialFamily,
            nu: Some(nu),
        });
    }
    let (r, value) = Objective::build(problem, &p_set)?.minimize()?;
    Ok(BoundReport {
        value,
        r_star: Minimizer::Radius(r),
        method: BoundMethod::UpperTrialFamily,
        nu: Some(nu),
    })
}

/// Smallest upper bound over ν: grid scan, then golden-section refinement
/// (in ln ν) around the best interior grid point.
pub fn upper_bound_optimized(
    problem: &Problem,
    nu_range: (f64, f64),
    nu_steps: usize,
) -> Result<BoundReport> {
    let (lo, hi) = nu_range;
    if !(lo > 0.0 && hi >= lo && hi <= 5.0) {
        return Err(Error::domain(format!(
            "nu range must satisfy 0 < lo <= hi <= 5, got ({lo}, {hi})"
        )));
    }
    if nu_steps < 3 {
        return Err(Error::domain(format!(
            "need at least 3 nu steps, got {nu_steps}"
        )));
    }
    if lo == hi {
        return upper_bound(problem, lo);
    }
    let value_at = |nu: f64| upper_bound(problem, nu).map_or(f64::INFINITY, |b| b.value);
    let grid: Vec<(f64, f64)> = (0..nu_steps)
        .map(|i| {
            let nu = lo + (hi - lo) * i as f64 / (nu_steps - 1) as f64;
            (nu, value_at(nu))
        })
        .collect();
    let (best, &(nu_best, v_best)) = grid
        .iter()
        .enumerate()
        .min_by(|a, b| a.1 .1.total_cmp(&b.1 .1))
        .expect("non-empty grid");
    if !v_best.is_finite() {
        // every ν failed; surface the error from the first grid point
        return upper_bound(problem, lo);
    }
    let mut nu_star = nu_best;
    if best > 0 && best + 1 < grid.len() {
        if let Ok((nu, v)) = Bracket::with_interior(grid[best - 1].0, nu_best, grid[best + 1].0)
            .and_then(|b| minimize_unimodal(value_at, b, 1e-9))
        {
            if v <= v_best {
                nu_star = nu;
            }
        }
    }
    upper_bound(problem, nu_star)
}

fn single_term(problem: &Problem) -> Result<(f64, f64)> {
    let potential = &problem.potential;
    match (potential.power_terms(), potential.log_coefficient()) {
        ([t], 0.0) => Ok((t.q, t.a)),
        ([], a0) => Ok((0.0, a0)),
        _ => Err(Error::Contract(
            "complementary single-term bounds need exactly one potential term; \
             use lower_bound/upper_bound for sums"
                .into(),
        )),
    }
}

/// Complementary bounds for a single power (or log) term: lower with
/// P⁽¹⁾(q), upper with P⁽²⁾(q).
pub fn theorem1_bounds(problem: &Problem) -> Result<(BoundReport, BoundReport)> {
    let (q, _) = single_term(problem)?;
    if q == COULOMB {
        return Err(Error::MissingPNumber { q });
    }
    let lower_set =
        PNumberSet::from_values(PKind::RelativisticLower, vec![(q, lower_p_number(q)?)])?;
    let upper_set =
        PNumberSet::from_values(PKind::Schrodinger, vec![(q, schrodinger_p_number(q)?)])?;
    let (r_lo, lower) = Objective::build(problem, &lower_set)?.minimize()?;
    let (r_hi, upper) = Objective::build(problem, &upper_set)?.minimize()?;
    Ok((
        BoundReport {
            value: lower,
            r_star: Minimizer::Radius(r_lo),
            method: BoundMethod::LowerSingleTerm,
            nu: None,
        },
        BoundReport {
            value: upper,
            r_star: Minimizer::Radius(r_hi),
            method: BoundMethod::UpperSingleTerm,
            nu: None,
        },
    ))
}

/// Declared convexity of a potential shape W as a function of r.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Convex,
    Concave,
}

fn envelope(
    beta: f64,
    m: f64,
    v: f64,
    shape_fn: &dyn Fn(f64) -> f64,
    p: f64,
    method: BoundMethod,
) -> Result<BoundReport> {
    if !(v > 0.0) || !(beta > 0.0) || !(m >= 0.0) {
        return Err(Error::domain(format!(
            "envelope bound needs v > 0, beta > 0 and m >= 0, got v={v}, beta={beta}, m={m}"
        )));
    }
    let f = |r: f64| beta * m.hypot(1.0 / r) + v * shape_fn(p * r);
    let (r, value) = minimize_from_seed(f, 1.0 / m.max(1.0))?;
    Ok(BoundReport {
        value,
        r_star: Minimizer::Radius(r),
        method,
        nu: None,
    })
}

/// min_r { β√(m² + 1/r²) + v·W(P⁽¹⁾(1)·r) } for W increasing and convex in r.
///
/// Only the minimum itself is a bound; the expression at other r is not.
pub fn envelope_lower_convex(
    beta: f64,
    m: f64,
    v: f64,
    shape_fn: &dyn Fn(f64) -> f64,
    shape: Shape,
) -> Result<BoundReport> {
    if shape == Shape::Concave {
        return Err(Error::Contract(
            "a concave W gives an upper bound; use envelope_upper_concave".into(),
        ));
    }
    envelope(
        beta,
        m,
        v,
        shape_fn,
        lower_p_number(1.0)?,
        BoundMethod::LowerEnvelope,
    )
}

/// min_r { β√(m² + 1/r²) + v·W(P⁽²⁾(1)·r) } for W increasing and concave in r.
pub fn envelope_upper_concave(
    beta: f64,
    m: f64,
    v: f64,
    shape_fn: &dyn Fn(f64) -> f64,
    shape: Shape,
) -> Result<BoundReport> {
    if shape == Shape::Convex {
        return Err(Error::Contract(
            "a convex W gives a lower bound; use envelope_lower_convex".into(),
        ));
    }
    envelope(
        beta,
        m,
        v,
        shape_fn,
        schrodinger_p_number(1.0)?,
        BoundMethod::UpperEnvelope,
    )
}

/// Summed component kinetic potentials at one mean momentum s.
#[derive(Debug, Clone, PartialEq)]
pub struct SubadditivitySample {
    pub s: f64,
    pub kinetic: f64,
    /// h̄_i(p; s) for each term, power terms in ascending q then the log term.
    pub components: Vec<f64>,
    /// kinetic + Σ components
    pub total: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubadditivityReport {
    pub samples: Vec<SubadditivitySample>,
    /// min over s of the summed-component expression.
    pub bound: f64,
    pub oracle: f64,
    /// oracle − bound; non-negative when the inequality holds.
    pub margin: f64,
}

/// Evaluates the summed-component lower bound min_s {K(s) + Σ h̄_i(p; s)} on
/// a grid of mean kinetic energies and compares its minimum with the
/// Rayleigh–Ritz energy.
pub fn sum_subadditivity_check(
    problem: &Problem,
    s_grid: &[f64],
    settings: &OracleSettings,
) -> Result<SubadditivityReport> {
    if s_grid.iter().any(|&s| !(s > 0.0)) {
        return Err(Error::domain("mean kinetic energies must be positive"));
    }
    let potential = &problem.potential;
    let p_set = PNumberSet::lower_for(potential)?;
    let v = problem.coulomb_coupling();
    let components = |s: f64| -> Result<Vec<f64>> {
        let mut out = Vec::new();
        for t in potential.power_terms() {
            let h = if t.q == COULOMB {
                -t.a * s / coulomb_running_p(v)?
            } else {
                let p = p_set.get(t.q).ok_or(Error::MissingPNumber { q: t.q })?;
                t.a * t.q.signum() * (p / s).powf(t.q)
            };
            out.push(h);
        }
        if potential.log_coefficient() > 0.0 {
            let p = p_set.get(0.0).ok_or(Error::MissingPNumber { q: 0.0 })?;
            out.push(potential.log_coefficient() * (p / s).ln());
        }
        Ok(out)
    };
    let samples = s_grid
        .iter()
        .map(|&s| {
            let comps = components(s)?;
            let kinetic = problem.kinetic(s);
            Ok(SubadditivitySample {
                s,
                kinetic,
                total: kinetic + comps.iter().sum::<f64>(),
                components: comps,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let bound = lower_bound(problem)?.value;
    let oracle = salpeter_ground(problem, settings)?.energy;
    Ok(SubadditivityReport {
        samples,
        bound,
        oracle,
        margin: oracle - bound,
    })
}
