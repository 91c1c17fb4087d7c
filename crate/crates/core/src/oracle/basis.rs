//! s-wave radial basis functions and matrix assembly.

use crate::error::Result;
use crate::numerics::{radial_rule, Matrix};

/// Which radial basis spans the trial space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisFamily {
    /// 3-D harmonic-oscillator functions e^{-r²/2b²} L_n^{1/2}(r²/b²). Closed
    /// under Fourier transform, so every kinetic operator is available.
    Oscillator,
    /// Exponential functions e^{-r/2b} L_n^{2}(r/b). Position-space only, so
    /// restricted to K = p².
    Laguerre,
}

/// Kinetic-energy operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kinetic {
    /// p²
    Schrodinger,
    /// p
    Ultrarelativistic,
    /// β√(m² + p²)
    Salpeter { mass: f64, beta: f64 },
}

impl Kinetic {
    #[inline]
    pub fn at(&self, p: f64) -> f64 {
        match *self {
            Kinetic::Schrodinger => p * p,
            Kinetic::Ultrarelativistic => p,
            Kinetic::Salpeter { mass, beta } => beta * mass.hypot(p),
        }
    }
}

/// Normalized generalized-Laguerre values
/// ℓ_k(x) = e^{-x/2} L_k^α(x) · √(k!/Γ(k+α+1)) for k < n, written into `out`.
fn normalized_laguerre(alpha: f64, x: f64, out: &mut [f64]) {
    let n = out.len();
    if n == 0 {
        return;
    }
    let ln_gamma_alpha1 = crate::numerics::ln_gamma(alpha + 1.0).unwrap_or(0.0);
    out[0] = (-0.5 * x - 0.5 * ln_gamma_alpha1).exp();
    if n == 1 {
        return;
    }
    out[1] = (1.0 + alpha - x) / (1.0 + alpha).sqrt() * out[0];
    for k in 1..n - 1 {
        let kf = k as f64;
        let a = (2.0 * kf + 1.0 + alpha - x) / ((kf + 1.0) * (kf + 1.0 + alpha)).sqrt();
        let b = (kf * (kf + alpha) / ((kf + 1.0) * (kf + 1.0 + alpha))).sqrt();
        out[k + 1] = a * out[k] - b * out[k - 1];
    }
}

/// Oscillator radial functions R_n(r; b), orthonormal in ∫ r² dr.
pub(crate) fn oscillator_values(b: f64, r: f64, out: &mut [f64]) {
    let x = (r / b).powi(2);
    normalized_laguerre(0.5, x, out);
    let norm = (2.0 / (b * b * b)).sqrt();
    out.iter_mut().for_each(|v| *v *= norm);
}

/// Exponential radial functions and their r-derivatives.
pub(crate) fn laguerre_values(b: f64, r: f64, values: &mut [f64], derivs: &mut [f64]) {
    let n = values.len();
    let x = r / b;
    normalized_laguerre(2.0, x, values);
    let mut shifted = vec![0.0; n.saturating_sub(1)];
    normalized_laguerre(3.0, x, &mut shifted);
    let norm = b.powf(-1.5);
    for k in 0..n {
        let lower = if k > 0 {
            (k as f64).sqrt() * shifted[k - 1]
        } else {
            0.0
        };
        derivs[k] = norm / b * (-lower - 0.5 * values[k]);
        values[k] *= norm;
    }
}

/// Accumulates Σ_k w_k g(x_k) f_i(x_k) f_j(x_k) into the lower triangle.
fn accumulate(h: &mut Matrix, weight: f64, f: &[f64]) {
    for i in 0..f.len() {
        let wi = weight * f[i];
        for (j, &fj) in f[..=i].iter().enumerate() {
            h.set(i, j, h.get(i, j) + wi * fj);
        }
    }
}

fn symmetrize(h: &mut Matrix) {
    let n = h.dim();
    for i in 0..n {
        for j in 0..i {
            h.set(j, i, h.get(i, j));
        }
    }
}

/// Radial extent beyond which every basis function is negligible, in units
/// of the basis scale.
fn oscillator_extent(n: usize) -> f64 {
    (4.0 * n as f64 + 80.0).sqrt()
}

fn laguerre_extent(n: usize) -> f64 {
    4.0 * n as f64 + 150.0
}

/// Hamiltonian matrix of K + V in `n` basis functions of scale `b`.
pub(crate) fn hamiltonian(
    family: BasisFamily,
    kinetic: Kinetic,
    potential: &dyn Fn(f64) -> f64,
    n: usize,
    b: f64,
    order: usize,
) -> Result<Matrix> {
    let mut h = Matrix::zeros(n);
    let mut f = vec![0.0; n];
    match family {
        BasisFamily::Oscillator => {
            let rule = radial_rule(order, b * oscillator_extent(n))?;
            for (&r, &w) in rule.nodes.iter().zip(&rule.weights) {
                oscillator_values(b, r, &mut f);
                accumulate(&mut h, w * r * r * potential(r), &f);
            }
            // momentum-space functions: (−1)^n R_n(p; 1/b)
            let pb = 1.0 / b;
            let rule = radial_rule(order, pb * oscillator_extent(n))?;
            for (&p, &w) in rule.nodes.iter().zip(&rule.weights) {
                oscillator_values(pb, p, &mut f);
                for (k, v) in f.iter_mut().enumerate() {
                    if k % 2 == 1 {
                        *v = -*v;
                    }
                }
                accumulate(&mut h, w * p * p * kinetic.at(p), &f);
            }
        }
        BasisFamily::Laguerre => {
            debug_assert!(matches!(kinetic, Kinetic::Schrodinger));
            let mut d = vec![0.0; n];
            let rule = radial_rule(order, b * laguerre_extent(n))?;
            for (&r, &w) in rule.nodes.iter().zip(&rule.weights) {
                laguerre_values(b, r, &mut f, &mut d);
                accumulate(&mut h, w * r * r * potential(r), &f);
                // ⟨p²⟩ = ∫ r² R_i' R_j' dr for ℓ = 0
                accumulate(&mut h, w * r * r, &d);
            }
        }
    }
    symmetrize(&mut h);
    Ok(h)
}
