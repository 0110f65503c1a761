use thiserror::Error;

/// Errors produced by the sequence, saddle and rendering routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A coefficient token could not be read as an integer.
    #[error("cannot parse coefficient {index} ({token:?}): {reason}")]
    Parse {
        index: usize,
        token: String,
        reason: String,
    },

    /// The exponent polynomial violates one of its invariants.
    #[error("invalid polynomial: {0}")]
    Domain(String),

    /// An argument is outside the operation's precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Printed digits did not stabilise before the precision cap.
    #[error("rendering did not stabilise at {bits} bits of working precision")]
    Precision { bits: u32 },

    /// The saddle solver failed to meet its residual tolerance.
    #[error(
        "saddle solver did not converge for n = {n}: bracket [{lo}, {hi}], residual {residual}"
    )]
    NoConvergence {
        n: u64,
        lo: String,
        hi: String,
        residual: String,
    },

    /// Every row of an error-order fit had zero error.
    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    /// A request exceeded a configured resource cap.
    #[error("n = {n} exceeds the configured cap of {cap}")]
    ResourceCap { n: u64, cap: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
