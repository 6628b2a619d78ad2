use thiserror::Error;

/// Errors produced by the semigroup and pseudo-variety routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generators {0:?} do not generate a numerical semigroup (gcd != 1)")]
    NotANumericalSemigroup(Vec<i64>),

    #[error("invalid generator list: {0}")]
    InvalidGenerators(String),

    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(i64),

    #[error("{0} is not an element of the semigroup")]
    NotAnElement(i64),

    #[error("{0} cannot be removed: it must be a minimal generator above the Frobenius number other than the multiplicity")]
    NotRemovable(i64),

    #[error("the invariant is undefined for the semigroup of all non-negative integers")]
    WholeNaturals,

    #[error("invalid tuple {tuple:?} for modulus {m}: {reason}")]
    InvalidTuple {
        m: usize,
        tuple: Vec<i64>,
        reason: &'static str,
    },

    #[error("the semigroup is not a member of the requested family")]
    NotAMember,

    #[error("bound {bound} is below the smallest admissible value {min}")]
    InvalidBound { bound: i64, min: i64 },

    #[error("pattern sets have different moduli ({0} vs {1})")]
    ModulusMismatch(usize, usize),

    #[error("materializing {count} tuples exceeds the cap of {cap}")]
    TooLarge { count: u128, cap: usize },

    #[error("element set bound {0} is too small to certify the invariants")]
    InsufficientBound(i64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid pattern file: {0}")]
    PatternFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
