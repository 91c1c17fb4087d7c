use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("bracket [{lo}, {hi}] does not enclose a minimum")]
    Bracketing { lo: f64, hi: f64 },

    #[error("objective has no interior minimum after {expansions} bracket expansions")]
    UnboundedObjective { expansions: usize },

    #[error(
        "Coulomb coupling v = a(-1)/beta = {v} is not below 1/2; \
         the Coulomb lower bound requires v < 1/2"
    )]
    CouplingTooLarge { v: f64 },

    #[error("no discrete spectrum: {0}")]
    NoDiscreteSpectrum(String),

    #[error("unsupported potential term with exponent q = {q}: {reason}")]
    UnsupportedTerm { q: f64, reason: &'static str },

    #[error("no P-number available for exponent q = {q}")]
    MissingPNumber { q: f64 },

    #[error("invalid coupling curve: {0}")]
    InvalidCurve(String),

    #[error("coupling curve is linear in v; its kinetic part vanishes")]
    DegenerateCurve,

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("matrix is not symmetric (relative asymmetry {asymmetry:e})")]
    Asymmetric { asymmetry: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
