use thiserror::Error;

/// Errors surfaced by coefficient generation, bound construction and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precision cap of {cap} bits exceeded")]
    PrecisionCapExceeded { cap: u32 },

    #[error("need coefficient index {needed} but only {available} coefficients were supplied")]
    InsufficientCoefficients { needed: usize, available: usize },

    #[error("order {order} is below the minimum {min} for target {target}")]
    OrderTooSmall {
        target: &'static str,
        order: usize,
        min: usize,
    },

    #[error("x = {x} lies outside the domain {domain}")]
    DomainViolation { x: String, domain: String },

    #[error("endpoint {0} is not a single-term constant")]
    NonMonomialEndpoint(String),

    #[error("cannot parse constant {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
