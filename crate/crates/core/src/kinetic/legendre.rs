//! Coupling curves F(v) and the Legendre transform to kinetic potentials:
//! s = F(v) − v·F'(v), h̄(s) = F'(v), and back via F(v) = min_s {s + v·h̄(s)}.

use crate::error::{Error, Result};

/// Tolerance on increases of the slope of F between neighbouring samples.
pub const CONCAVITY_TOL: f64 = 1e-8;

/// Samples (v, F(v)) of a ground-state energy as a function of coupling.
#[derive(Debug, Clone, PartialEq)]
pub struct CouplingCurve {
    samples: Vec<(f64, f64)>,
}

impl CouplingCurve {
    pub fn new(samples: Vec<(f64, f64)>) -> Result<Self> {
        if samples.len() < 3 {
            return Err(Error::InvalidCurve(format!(
                "need at least 3 samples, got {}",
                samples.len()
            )));
        }
        if samples.iter().any(|&(v, f)| !(v > 0.0) || !f.is_finite()) {
            return Err(Error::InvalidCurve(
                "couplings must be positive and energies finite".into(),
            ));
        }
        if samples.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(Error::InvalidCurve(
                "couplings must be strictly increasing".into(),
            ));
        }
        let slopes: Vec<f64> = samples
            .windows(2)
            .map(|w| (w[1].1 - w[0].1) / (w[1].0 - w[0].0))
            .collect();
        for (i, s) in slopes.windows(2).enumerate() {
            if s[1] - s[0] > CONCAVITY_TOL * (1.0 + s[0].abs()) {
                return Err(Error::InvalidCurve(format!(
                    "not concave near v = {}: slope rises from {} to {}",
                    samples[i + 1].0,
                    s[0],
                    s[1]
                )));
            }
        }
        Ok(CouplingCurve { samples })
    }

    /// Samples F at geometrically spaced couplings.
    pub fn from_fn(f: impl Fn(f64) -> f64, v_lo: f64, v_hi: f64, count: usize) -> Result<Self> {
        CouplingCurve::new(
            geometric_grid(v_lo, v_hi, count)?
                .into_iter()
                .map(|v| (v, f(v)))
                .collect(),
        )
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    /// F'(v) at each sample from the interpolating polynomial through a
    /// five-point stencil, centred where the grid allows; three points when
    /// only three samples exist.
    pub fn derivatives(&self) -> Vec<f64> {
        let s = &self.samples;
        let n = s.len();
        let width = n.min(5);
        (0..n)
            .map(|i| {
                let first = i.saturating_sub(width / 2).min(n - width);
                lagrange_derivative(&s[first..first + width], s[i].0)
            })
            .collect()
    }

    /// Least-squares exponent k of F ∝ v^k on a log–log scale.
    pub fn power_law_exponent(&self) -> Result<f64> {
        if self.samples.iter().any(|&(_, f)| f <= 0.0) {
            return Err(Error::InvalidCurve(
                "power-law fit needs positive energies".into(),
            ));
        }
        let pts: Vec<(f64, f64)> = self
            .samples
            .iter()
            .map(|&(v, f)| (v.ln(), f.ln()))
            .collect();
        let n = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        Ok(sxy / sxx)
    }
}

/// Derivative at `x` of the polynomial interpolating `pts`.
fn lagrange_derivative(pts: &[(f64, f64)], x: f64) -> f64 {
    let mut total = 0.0;
    for (i, &(xi, yi)) in pts.iter().enumerate() {
        // d/dx Π_{k≠i} (x − x_k)/(x_i − x_k)
        let mut basis_derivative = 0.0;
        for (l, &(xl, _)) in pts.iter().enumerate() {
            if l == i {
                continue;
            }
            let mut term = 1.0 / (xi - xl);
            for (k, &(xk, _)) in pts.iter().enumerate() {
                if k != i && k != l {
                    term *= (x - xk) / (xi - xk);
                }
            }
            basis_derivative += term;
        }
        total += yi * basis_derivative;
    }
    total
}

pub fn geometric_grid(lo: f64, hi: f64, count: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && hi > lo) || count < 2 {
        return Err(Error::domain(format!(
            "geometric grid needs 0 < lo < hi and count >= 2, got [{lo}, {hi}] x {count}"
        )));
    }
    let ratio = (hi / lo).ln() / (count - 1) as f64;
    Ok((0..count).map(|i| lo * (ratio * i as f64).exp()).collect())
}

/// One point (s, h̄(s)) of a kinetic potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KineticPoint {
    pub s: f64,
    pub hbar: f64,
}

/// Parametric kinetic potential s = F − vF', h̄ = F'.
pub fn kinetic_potential_from_curve(curve: &CouplingCurve) -> Result<Vec<KineticPoint>> {
    let derivs = curve.derivatives();
    let points: Vec<KineticPoint> = curve
        .samples()
        .iter()
        .zip(&derivs)
        .map(|(&(v, f), &d)| KineticPoint {
            s: f - v * d,
            hbar: d,
        })
        .collect();
    let scale = curve
        .samples()
        .iter()
        .map(|&(_, f)| f.abs())
        .fold(0.0, f64::max)
        .max(1.0);
    if points.iter().any(|p| p.s <= 1e-9 * scale) {
        return Err(Error::DegenerateCurve);
    }
    Ok(points)
}

/// Minimum of s + v·h̄(s) over a sampled kinetic potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LegendreEnergy {
    pub energy: f64,
    pub s_star: f64,
    /// The minimum sits on the first or last sample, so the true minimum
    /// may lie outside the sampled range.
    pub at_boundary: bool,
}

/// F(v) recovered from kinetic-potential samples: the discrete minimum,
/// refined on a local polynomial interpolant in ln s.
pub fn energy_from_kinetic_potential(samples: &[KineticPoint], v: f64) -> Result<LegendreEnergy> {
    if samples.len() < 3 {
        return Err(Error::InvalidCurve(format!(
            "need at least 3 kinetic-potential samples, got {}",
            samples.len()
        )));
    }
    if !(v > 0.0) {
        return Err(Error::domain(format!("coupling must be positive, got {v}")));
    }
    // s + v·h̄(s) is close to symmetric about its minimum in ln s
    let mut pts: Vec<(f64, f64)> = samples
        .iter()
        .map(|p| (p.s.ln(), p.s + v * p.hbar))
        .collect();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (j, &(s_j, g_j)) = pts
        .iter()
        .enumerate()
        .min_by(|a, b| a.1 .1.total_cmp(&b.1 .1))
        .expect("non-empty");
    if j == 0 || j == pts.len() - 1 {
        return Ok(LegendreEnergy {
            energy: g_j,
            s_star: s_j.exp(),
            at_boundary: true,
        });
    }
    // interpolate through five samples where available, three at the edges
    let window = if j >= 2 && j + 2 < pts.len() {
        &pts[j - 2..=j + 2]
    } else {
        &pts[j - 1..=j + 1]
    };
    let (lo, hi) = (pts[j - 1].0, pts[j + 1].0);
    let (x_star, value) = golden_min(|x| lagrange(window, x), lo, hi);
    if value <= g_j {
        return Ok(LegendreEnergy {
            energy: value,
            s_star: x_star.exp(),
            at_boundary: false,
        });
    }
    Ok(LegendreEnergy {
        energy: g_j,
        s_star: s_j.exp(),
        at_boundary: false,
    })
}

fn lagrange(pts: &[(f64, f64)], x: f64) -> f64 {
    pts.iter()
        .enumerate()
        .map(|(i, &(xi, yi))| {
            pts.iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .fold(yi, |acc, (_, &(xk, _))| acc * (x - xk) / (xi - xk))
        })
        .sum()
}

/// Golden-section minimum of `f` on [lo, hi].
fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let ratio = 0.5 * (5f64.sqrt() - 1.0);
    let mut a = hi - ratio * (hi - lo);
    let mut b = lo + ratio * (hi - lo);
    let (mut fa, mut fb) = (f(a), f(b));
    while hi - lo > 1e-12 * (1.0 + lo.abs().max(hi.abs())) {
        if fa < fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - ratio * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + ratio * (hi - lo);
            fb = f(b);
        }
    }
    let x = 0.5 * (lo + hi);
    (x, f(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_root_curve() {
        // F(v) = 2√v: s = √v, h̄ = 1/√v, i.e. h̄(s) = 1/s
        let curve = CouplingCurve::from_fn(|v| 2.0 * v.sqrt(), 0.25, 4.0, 161).unwrap();
        let kp = kinetic_potential_from_curve(&curve).unwrap();
        for (p, &(v, _)) in kp.iter().zip(curve.samples()) {
            assert!((p.s - v.sqrt()).abs() < 1e-3);
            assert!((p.hbar * p.s - 1.0).abs() < 1e-3);
        }
        assert!(kp.windows(2).all(|w| w[1].s > w[0].s));
    }

    #[test]
    fn exact_kinetic_potential_gives_two_sqrt_v() {
        let samples: Vec<KineticPoint> = geometric_grid(0.05, 20.0, 400)
            .unwrap()
            .into_iter()
            .map(|s| KineticPoint { s, hbar: 1.0 / s })
            .collect();
        let e = energy_from_kinetic_potential(&samples, 1.0).unwrap();
        assert!((e.energy - 2.0).abs() < 1e-6);
        assert!(!e.at_boundary);
        let e = energy_from_kinetic_potential(&samples, 4.0).unwrap();
        assert!((e.energy - 4.0).abs() < 1e-6);
        let e = energy_from_kinetic_potential(&samples, 1e4).unwrap();
        assert!(e.at_boundary);
    }

    #[test]
    fn round_trip_reproduces_curve() {
        let f = |v: f64| 2.0 * v.sqrt();
        let curve = CouplingCurve::from_fn(f, 0.25, 4.0, 61).unwrap();
        let kp = kinetic_potential_from_curve(&curve).unwrap();
        for &(v, fv) in &curve.samples()[5..56] {
            let e = energy_from_kinetic_potential(&kp, v).unwrap();
            assert!((e.energy - fv).abs() < 1e-6, "v={v}: {} vs {fv}", e.energy);
        }
    }

    #[test]
    fn linear_curve_is_degenerate() {
        let curve = CouplingCurve::from_fn(|v| 3.0 * v, 0.5, 2.0, 5).unwrap();
        assert_eq!(
            kinetic_potential_from_curve(&curve),
            Err(Error::DegenerateCurve)
        );
    }

    #[test]
    fn rejects_convex_and_short_curves() {
        assert!(matches!(
            CouplingCurve::from_fn(|v| v * v, 0.5, 2.0, 5),
            Err(Error::InvalidCurve(_))
        ));
        assert!(CouplingCurve::new(vec![(1.0, 1.0), (2.0, 1.5)]).is_err());
        assert!(CouplingCurve::new(vec![(1.0, 1.0), (1.0, 1.5), (2.0, 2.0)]).is_err());
    }

    #[test]
    fn exponent_fit() {
        let curve = CouplingCurve::from_fn(|v| 1.7 * v.powf(2.0 / 3.0), 0.5, 2.0, 3).unwrap();
        assert!((curve.power_law_exponent().unwrap() - 2.0 / 3.0).abs() < 1e-12);
    }
}
