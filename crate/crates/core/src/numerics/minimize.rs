//! One-dimensional minimization over a positive radius.
//!
//! Everything here works in the log variable u = ln r; the objectives that
//! appear in the bound formulas are much closer to parabolic in u than in r.

use crate::error::{Error, Result};

/// Default relative tolerance on the minimizing radius.
pub const DEFAULT_REL_TOL: f64 = 1e-10;

const MAX_EXPANSIONS: usize = 200;
const GOLDEN: f64 = 0.381_966_011_250_105_1;

/// A radius interval `lo < interior < hi` with `f(interior)` below both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub interior: f64,
}

impl Bracket {
    /// Bracket whose interior point is the geometric mean of the endpoints.
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo > 0.0 && hi > lo && hi.is_finite()) {
            return Err(Error::Bracketing { lo, hi });
        }
        Ok(Bracket {
            lo,
            hi,
            interior: (lo * hi).sqrt(),
        })
    }

    pub fn with_interior(lo: f64, interior: f64, hi: f64) -> Result<Self> {
        if !(lo > 0.0 && interior > lo && hi > interior && hi.is_finite()) {
            return Err(Error::Bracketing { lo, hi });
        }
        Ok(Bracket { lo, hi, interior })
    }

    pub fn contains(&self, r: f64) -> bool {
        self.lo < r && r < self.hi
    }
}

/// Non-finite values are treated as +∞ so that overflow at the domain edges
/// reads as "uphill".
fn eval(f: &impl Fn(f64) -> f64, r: f64) -> f64 {
    let v = f(r);
    if v.is_nan() {
        f64::INFINITY
    } else {
        v
    }
}

/// Golden-section search in u = ln r.
///
/// Returns `(r_star, f(r_star))`. The search stops once the bracket width in
/// u drops below `rel_tol`; because a smooth minimum is flat to second
/// order, the location itself is only resolved to about √ε relative even
/// though `f_star` is accurate to rounding.
pub fn minimize_unimodal(
    f: impl Fn(f64) -> f64,
    bracket: Bracket,
    rel_tol: f64,
) -> Result<(f64, f64)> {
    let fa = eval(&f, bracket.lo);
    let fb = eval(&f, bracket.interior);
    let fc = eval(&f, bracket.hi);
    if !(fb < fa && fb < fc) {
        return Err(Error::Bracketing {
            lo: bracket.lo,
            hi: bracket.hi,
        });
    }
    let tol = rel_tol.max(f64::EPSILON);
    let g = |u: f64| eval(&f, u.exp());

    let (mut a, mut c) = (bracket.lo.ln(), bracket.hi.ln());
    let b = bracket.interior.ln();
    // (x1, x2) interior points with x1 < x2
    let (mut x1, mut x2);
    if c - b > b - a {
        x1 = b;
        x2 = b + GOLDEN * (c - b);
    } else {
        x2 = b;
        x1 = b - GOLDEN * (b - a);
    }
    let mut f1 = g(x1);
    let mut f2 = g(x2);
    let mut iterations = 0;
    while (c - a).abs() > tol * (1.0 + 0.5 * (a + c).abs()) && iterations < 500 {
        if f2 < f1 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = x1 + GOLDEN * (c - x1);
            f2 = g(x2);
        } else {
            c = x2;
            x2 = x1;
            f2 = f1;
            x1 = x2 - GOLDEN * (x2 - a);
            f1 = g(x1);
        }
        iterations += 1;
    }
    let (u_star, f_star) = if f1 < f2 { (x1, f1) } else { (x2, f2) };
    // interior point never got worse than the starting one
    if fb < f_star {
        return Ok((bracket.interior, fb));
    }
    Ok((u_star.exp(), f_star))
}

/// Grows a bracket geometrically (factor 2) in both directions from `seed`
/// until an interior point lies below both ends.
pub fn expand_bracket(f: impl Fn(f64) -> f64, seed: f64) -> Result<Bracket> {
    if !(seed > 0.0 && seed.is_finite()) {
        return Err(Error::domain(format!(
            "bracket seed must be positive, got {seed}"
        )));
    }
    let mut mid = seed;
    let mut fmid = eval(&f, mid);
    if !fmid.is_finite() {
        return Err(Error::domain(format!(
            "objective not finite at seed {seed}"
        )));
    }
    let mut lo = seed / 2.0;
    let mut hi = seed * 2.0;
    let mut flo = eval(&f, lo);
    let mut fhi = eval(&f, hi);

    for _ in 0..MAX_EXPANSIONS {
        if fmid < flo && fmid < fhi {
            return Bracket::with_interior(lo, mid, hi);
        }
        if flo <= fhi {
            // downhill toward the origin
            hi = mid;
            fhi = fmid;
            mid = lo;
            fmid = flo;
            lo /= 2.0;
            flo = eval(&f, lo);
        } else {
            lo = mid;
            flo = fmid;
            mid = hi;
            fmid = fhi;
            hi *= 2.0;
            fhi = eval(&f, hi);
        }
    }
    Err(Error::UnboundedObjective {
        expansions: MAX_EXPANSIONS,
    })
}

/// Brackets from `seed` and minimizes with the default tolerance.
pub fn minimize_from_seed(f: impl Fn(f64) -> f64, seed: f64) -> Result<(f64, f64)> {
    let bracket = expand_bracket(&f, seed)?;
    minimize_unimodal(&f, bracket, DEFAULT_REL_TOL)
}
