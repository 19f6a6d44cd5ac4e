use alloc::string::String;
use core::fmt;

use crate::graph::FamilySpec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The color data does not describe a valid coloring of a complete graph.
    InvalidColoring(String),
    /// An edge list is not a simple subgraph of the host.
    InvalidSubgraph(String),
    /// The family is empty or undefined on `K_n`.
    InvalidFamily {
        family: FamilySpec,
        n: usize,
        reason: &'static str,
    },
    /// Arguments outside the documented range of an operation.
    Precondition(String),
    /// Cycle families in the two-color band where no simply-ordered coloring is optimal.
    NoSimplyOrderedOptimum { n: usize, q: usize },
    /// `q > 2r - 3`: a seed would have a single color.
    NoSeed { r: usize, q: usize },
    /// The input has no order structure the operation can work with.
    OutOfScope(&'static str),
    /// An exact search would exceed its configured limit.
    BudgetExceeded { what: &'static str, limit: u64 },
    /// The operation requires a polychromatic input.
    NotPolychromatic,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidColoring(msg) => write!(f, "invalid coloring: {msg}"),
            Error::InvalidSubgraph(msg) => write!(f, "invalid subgraph: {msg}"),
            Error::InvalidFamily { family, n, reason } => {
                write!(f, "family {family} is not valid on K_{n}: {reason}")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::NoSimplyOrderedOptimum { n, q } => write!(
                f,
                "no simply-ordered optimum exists for cycles of length {} in K_{n}",
                n - q
            ),
            Error::NoSeed { r, q } => write!(
                f,
                "no multi-color seed exists for r = {r}, q = {q} (requires q <= 2r - 3)"
            ),
            Error::OutOfScope(msg) => write!(f, "out of scope: {msg}"),
            Error::BudgetExceeded { what, limit } => {
                write!(f, "budget exceeded: {what} (limit {limit})")
            }
            Error::NotPolychromatic => f.write_str("coloring is not polychromatic for the family"),
        }
    }
}

impl core::error::Error for Error {}
