use thiserror::Error;

/// Errors raised by table validation, group construction and the analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("{what} exceeds cap {cap} (needed {needed})")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        needed: usize,
    },

    #[error("identity axiom fails at cell ({row}, {col}): found {found}")]
    IdentityAxiom {
        row: String,
        col: String,
        found: String,
    },

    #[error("column {0} not bijective")]
    ColumnNotBijective(String),

    #[error("entry out of range at cell ({row}, {col})")]
    EntryOutOfRange { row: usize, col: usize },

    #[error("table is not square: expected {expected} entries in row {row}, found {found}")]
    NotSquare {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("right loop lacks unique two-sided inverses")]
    NoUniqueInverses,

    #[error("permutation {0} moves the identity")]
    MovesIdentity(String),

    #[error("element {0} is not in the group")]
    NotInGroup(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("subset is not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("subset is not a right transversal: {0}")]
    NotATransversal(String),

    #[error("identity is not in the transversal")]
    IdentityNotInTransversal,

    #[error("not a twisted right gyrogroup: {0}")]
    NotTwistedRightGyrogroup(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    /// A verified identity failed. These are theorems, so this is a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, cap: usize, needed: usize) -> Self {
        Error::CapExceeded { what, cap, needed }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
