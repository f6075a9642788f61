use thiserror::Error;

/// Errors raised by the set arithmetic, solvers, adversaries and referees.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two operands live over ground sets of different sizes.
    #[error("ground-set size mismatch: {left} vs {right}")]
    Dimension { left: usize, right: usize },

    /// A precondition of the called operation does not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    /// The `(n, k)` pair falls outside every regime the operation covers.
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),

    /// The answers handed to a decoder are not produced by any k-antichain.
    #[error("decode failure: {0}")]
    Decode(String),

    /// A brute-force routine was asked for more than its hard cap.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// The exhaustive minimax ran out of node budget before finishing.
    #[error("node budget of {budget} exhausted; bounds so far: {lower} <= f <= {}", upper.map_or_else(|| "?".to_string(), |u| u.to_string()))]
    BudgetExceeded {
        budget: u64,
        lower: u32,
        upper: Option<u32>,
    },
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn regime(msg: impl Into<String>) -> Self {
        Error::UnsupportedRegime(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    /// True for the cap and budget errors, as opposed to contract/regime/decode errors.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource(_) | Error::BudgetExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
