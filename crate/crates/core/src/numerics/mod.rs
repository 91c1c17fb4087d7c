//! Special functions, quadrature, 1-D minimization and a small symmetric
//! eigensolver. Pure functions; safe to call from any thread.

mod eigen;
mod minimize;
mod quadrature;
mod special;

pub use eigen::{symmetric_eigen_smallest, Matrix, MAX_DIM};
pub use minimize::{
    expand_bracket, minimize_from_seed, minimize_unimodal, Bracket, DEFAULT_REL_TOL,
};
pub use quadrature::{gauss_legendre, gauss_legendre_semi_infinite, radial_rule, QuadratureRule};
pub use special::{digamma, ln_gamma};
