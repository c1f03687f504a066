use std::fmt;

use thiserror::Error;

/// Why a table failed to describe a group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotAGroupReason {
    NotLatinSquare,
    NoIdentity,
    NotAssociative,
}

impl fmt::Display for NotAGroupReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotAGroupReason::NotLatinSquare => "not-latin-square",
            NotAGroupReason::NoIdentity => "no-identity",
            NotAGroupReason::NotAssociative => "not-associative",
        })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a group ({reason}): {witness}")]
    NotAGroup { reason: NotAGroupReason, witness: String },
    #[error("group closure exceeds the order cap of {cap}")]
    ClosureTooLarge { cap: usize },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("action of element {h} is not an automorphism: {witness}")]
    NotAnAutomorphism { h: usize, witness: String },
    #[error("action is not a homomorphism at ({h1}, {h2})")]
    NotAHomomorphism { h1: usize, h2: usize },
    #[error("subgroup is not normal: {witness}")]
    NotNormal { witness: String },
    #[error("parse error at offset {position}: expected {}", .expected.join(" or "))]
    Parse { position: usize, expected: Vec<String> },
    #[error("enumeration exceeds cap {cap}")]
    EnumerationTooLarge { cap: usize },
    #[error("group order {order} exceeds the isomorphism cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: usize },
    #[error("group is not a p-group")]
    NotPGroup,
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("undecidable: {0}")]
    Undecidable(String),
    #[error("discrepancy: {0}")]
    Discrepancy(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn bad(msg: impl Into<String>) -> Self {
        Error::BadParameters(msg.into())
    }

    /// True for the errors that mean "a configured size cap was hit".
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(
            self,
            Error::ClosureTooLarge { .. } | Error::EnumerationTooLarge { .. } | Error::TooLarge { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
