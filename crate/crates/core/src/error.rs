use thiserror::Error;

/// Errors raised by constructions and deciders in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input shape: {0}")]
    InputShape(String),

    #[error("invalid ground set: {0}")]
    InvalidGround(String),

    #[error("family is not a sigma-algebra: {0}")]
    InvalidFamily(String),

    #[error("{set} is not a member of the sigma-algebra")]
    NotMember { set: String },

    #[error("function is not measurable: values differ on atom {atom}")]
    NotMeasurable { atom: String },

    #[error("operands live on different measurable spaces")]
    SpaceMismatch,

    #[error("function is not a unit: its zero-set {zero_set} is nonempty")]
    NonUnit { zero_set: String },

    #[error("filter is not proper (it contains the empty set)")]
    ImproperFilter,

    #[error("ideal is not proper (it is the whole ring)")]
    ImproperIdeal,

    #[error("invalid lattice family: {0}")]
    InvalidLatticeFamily(String),

    #[error("{set} is not a prime element")]
    NotPrime { set: String },

    #[error("family lacks the finite intersection property; no ultrafilter extends it")]
    NoExtension,

    #[error("unknown point {0}")]
    UnknownPoint(String),

    #[error("unknown proposition id '{0}'")]
    UnknownProposition(String),

    #[error("resource cap exceeded: {what} needs more than {cap} steps")]
    ResourceCap { what: String, cap: u64 },

    #[error("independent computations disagree: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
