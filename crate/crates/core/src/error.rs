use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Caller supplied something outside an operation's domain.
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("complement is infinite: generators share the factor {gcd}")]
    InfiniteComplement { gcd: u64 },

    #[error("infeasible parameters: g = {genus}, rho = {rho} violates 2g >= 3 rho")]
    Infeasible { genus: u64, rho: u64 },

    #[error("outside hypothesis: {0}")]
    OutOfHypothesis(String),

    /// A result that is proven to hold came out false. Always a bug in this
    /// crate (sieve, sumset code or a formula), never an expected outcome.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}
