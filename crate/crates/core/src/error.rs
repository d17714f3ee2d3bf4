use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown space `{0}` (expected one of E6/P1, E6/P2, E7/P1, E7/P7, E8/P8, F4/P1, F4/P4, G2/P1, G2/P2)")]
    UnknownSpace(String),

    #[error("{space}: no Schubert class with label {label}")]
    UnknownLabel { space: String, label: String },

    #[error("{space}: constraint system for generator {generator} is infeasible at q-order {order}")]
    Infeasible {
        space: String,
        generator: char,
        order: u32,
    },

    #[error("{space}: degree {degree} exceeds the tracked range (max {max})")]
    DegreeOverflow { space: String, degree: u32, max: u32 },

    #[error("{space}: degree {degree} is not spanned by generator monomials")]
    Unsolvable { space: String, degree: u32 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{space}, degree {degree}, row {row}: {message}")]
    Invariant {
        space: String,
        degree: u32,
        row: String,
        message: String,
    },

    #[error("label sets differ: {0}")]
    LabelSetMismatch(String),

    #[error("cache format version mismatch: expected `{expected}`, found `{found}`")]
    CacheVersion { expected: String, found: String },

    #[error("cache checksum mismatch (file truncated or edited)")]
    CacheChecksum,

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
