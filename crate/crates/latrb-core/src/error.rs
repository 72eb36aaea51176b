use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by lattice construction, operator building, enumeration and
/// the check harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Some pair of elements lacks a unique least upper bound or greatest
    /// lower bound, so the input poset is not a lattice.
    #[error("elements {x} and {y} have no unique least upper bound or greatest lower bound")]
    NotALattice { x: usize, y: usize },

    #[error("cover relation contains a cycle")]
    CyclicCovers,

    #[error("element index {index} out of range for lattice of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("duplicate cover ({lo}, {hi})")]
    DuplicateCover { lo: usize, hi: usize },

    #[error("a lattice needs at least one element")]
    EmptyLattice,

    #[error("bad lattice spec: {0}")]
    BadSpec(String),

    #[error("bad parameters: {0}")]
    BadParams(ParamError),

    #[error("operator image has length {got}, lattice has size {expected}")]
    ImageLengthMismatch { expected: usize, got: usize },

    #[error("lattice size {size} exceeds enumeration limit {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },

    #[error("operators reference different lattices")]
    MixedLattices,

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("lattice is not distributive")]
    NotDistributive,

    #[error("operator is not a Rota-Baxter operator")]
    NotRotaBaxter,

    #[error("operator is not an isotone derivation")]
    NotIsotoneDerivation,

    #[error("i/o error: {0}")]
    Io(String),
}

/// A violated operator-family precondition, carried by [`Error::BadParams`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("element {0} is not an atom")]
    NotAnAtom(usize),

    #[error("element {0} is not strictly below the top")]
    NotBelowTop(usize),

    #[error("expected {lower} {relation} {upper} in the lattice order")]
    OrderViolation {
        lower: usize,
        upper: usize,
        relation: &'static str,
    },
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
