use crate::error::{Error, Result};

/// A set of nodes and positive weights on an interval.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Gauss–Legendre rule of the given order on `[lo, hi]`.
///
/// Nodes are the roots of P_n found by Newton iteration from the
/// Tricomi initial guesses; exact for polynomials of degree `2·order − 1`.
pub fn gauss_legendre(order: usize, lo: f64, hi: f64) -> Result<QuadratureRule> {
    if order < 2 {
        return Err(Error::domain(format!(
            "Gauss-Legendre order must be at least 2, got {order}"
        )));
    }
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::domain(format!("invalid interval [{lo}, {hi}]")));
    }
    let n = order;
    let nf = n as f64;
    let half = 0.5 * (hi - lo);
    let mid = 0.5 * (hi + lo);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];

    for i in 0..n.div_ceil(2) {
        let theta = std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5);
        let mut x = theta.cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        dp = if d != 0.0 { d } else { dp };
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x is the i-th largest root
        nodes[i] = mid - half * x;
        nodes[n - 1 - i] = mid + half * x;
        weights[i] = half * w;
        weights[n - 1 - i] = half * w;
    }
    Ok(QuadratureRule { nodes, weights })
}

/// P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Rule on `[0, ∞)` obtained from a Gauss–Legendre rule on `(0, 1)` through
/// x = t/(1 − t).
pub fn gauss_legendre_semi_infinite(order: usize) -> Result<QuadratureRule> {
    let base = gauss_legendre(order, 0.0, 1.0)?;
    let (nodes, weights) = base
        .nodes
        .iter()
        .zip(&base.weights)
        .map(|(&t, &w)| {
            let one_minus = 1.0 - t;
            (t / one_minus, w / (one_minus * one_minus))
        })
        .unzip();
    Ok(QuadratureRule { nodes, weights })
}

/// Rule on `[0, r_max]` clustered toward the origin through r = r_max·u².
///
/// Integrands with r⁻¹ or ln r behaviour at the origin pick up a factor
/// 2·r_max·u from the Jacobian and become smooth in u.
pub fn radial_rule(order: usize, r_max: f64) -> Result<QuadratureRule> {
    if !(r_max > 0.0) {
        return Err(Error::domain(format!(
            "radial cutoff must be positive, got {r_max}"
        )));
    }
    let base = gauss_legendre(order, 0.0, 1.0)?;
    let (nodes, weights) = base
        .nodes
        .iter()
        .zip(&base.weights)
        .map(|(&u, &w)| (r_max * u * u, w * 2.0 * r_max * u))
        .unzip();
    Ok(QuadratureRule { nodes, weights })
}
