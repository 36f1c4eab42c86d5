use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} of size {size} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("not a partition of the group: {0}")]
    NotAPartition(String),

    #[error("the basic set containing the identity is {class:?}, not a singleton")]
    IdentityClassNotSingleton { class: Vec<usize> },

    #[error("basic set {class:?} has inverse {inverse:?}, which is not a basic set")]
    NotInverseClosed {
        class: Vec<usize>,
        inverse: Vec<usize>,
    },

    /// The product of two basic sets has coefficient `coeff_a` at `a` and
    /// `coeff_b` at `b`, although `a` and `b` lie in one basic set.
    #[error(
        "product of {x:?} and {y:?} is not in the span of the basic sets: \
         coefficient {coeff_a} at {a} but {coeff_b} at {b}"
    )]
    ProductNotInSpan {
        x: Vec<usize>,
        y: Vec<usize>,
        a: usize,
        b: usize,
        coeff_a: i64,
        coeff_b: i64,
    },

    #[error("ring axiom `{axiom}` fails at {witness:?}")]
    RingAxiom {
        axiom: &'static str,
        witness: (usize, usize, usize),
    },

    #[error("ring is not local")]
    NotLocal,

    #[error("S-ring is not invariant under the unit multiplications of the ring")]
    NotAnSRingOverRing,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
