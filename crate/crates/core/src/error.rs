//! Error type shared across the library.

/// Environment variable overriding the vertex budget used by enumeration
/// and graph construction (default 2,000,000).
pub const BUDGET_ENV: &str = "FIBRUN_MAX_VERTICES";

/// Errors produced by string validation, graph construction, certificate
/// computation, and the pair constructions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A string argument does not have the expected length.
    #[error("length mismatch: expected {expected} columns, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    /// A string argument contains a character other than '0' or '1'.
    #[error("invalid character {ch:?} at column {col}: only '0' and '1' are allowed")]
    InvalidChar { ch: char, col: usize },

    /// The string (with "00" appended) violates the run constraint: some
    /// maximal run of 1s is not followed by a strictly longer run of 0s.
    #[error(
        "not a vertex: the run of 1s at columns {run_start}..={run_end} is not \
         followed by a strictly longer run of 0s (with \"00\" appended)"
    )]
    NotRunConstrained { run_start: usize, run_end: usize },

    /// Enumeration or graph construction would exceed the vertex budget.
    #[error(
        "vertex budget exceeded: {needed} vertices needed, budget is {budget} \
         (override with the {} environment variable)",
        BUDGET_ENV
    )]
    BudgetExceeded { needed: String, budget: u64 },

    /// The graph is not a single connected component (never happens for the
    /// graphs this library builds; checked defensively at build time).
    #[error("graph on {total} vertices is disconnected: only {reached} reachable from the first vertex")]
    Disconnected { reached: usize, total: usize },

    /// Two barrier windows overlap, so the additive certificate does not
    /// apply to this pair. Column spans are 1-based inclusive.
    #[error(
        "overlapping barrier windows {first:?} and {second:?}: the additive \
         distance certificate does not cover this pair"
    )]
    OverlappingBarriers {
        first: (usize, usize),
        second: (usize, usize),
    },

    /// A construction's parameters are geometrically infeasible or failed
    /// post-validation. Constructions are validated before being returned;
    /// an invalid pair is rejected, never emitted.
    #[error("infeasible construction: {reason}")]
    Infeasible { reason: String },

    /// An argument lies outside the supported domain.
    #[error("n = {n} outside the supported range {lo}..={hi}")]
    OutOfRange { n: u64, lo: u64, hi: u64 },

    /// A vertex string passed to a graph operation is not in the graph's
    /// vertex set (wrong length or not run-constrained are reported by the
    /// dedicated variants; this covers lookup of a valid-length string that
    /// failed membership, which indicates an internal inconsistency).
    #[error("vertex lookup failed for {vertex:?} in the length-{n} graph")]
    VertexNotFound { vertex: String, n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the command-line tool maps this error to:
    /// 3 = invalid vertex string, 4 = budget exceeded, 1 = everything else
    /// (usage errors exit 2 via the argument parser before reaching here).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::LengthMismatch { .. }
            | Error::InvalidChar { .. }
            | Error::NotRunConstrained { .. }
            | Error::VertexNotFound { .. } => 3,
            Error::BudgetExceeded { .. } => 4,
            _ => 1,
        }
    }
}
