use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid order n = {0}: need 2 <= n <= 64")]
    InvalidOrder(usize),

    #[error("distance {value} is out of range 1..={max} for n = {n}")]
    DistanceOutOfRange { value: i64, n: usize, max: usize },

    #[error("vertex {vertex} is out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("multiplier {a} is not a unit modulo {n}")]
    NonUnit { a: i64, n: usize },

    #[error("{what} = {value} exceeds the configured limit {limit}")]
    Capacity {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("arithmetic overflow while {0}")]
    Overflow(&'static str),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("cannot parse connection set {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Errors caused by the caller's input, as opposed to resource or
    /// consistency failures.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidOrder(_)
                | Error::DistanceOutOfRange { .. }
                | Error::VertexOutOfRange { .. }
                | Error::NonUnit { .. }
                | Error::Parameter(_)
                | Error::Parse { .. }
        )
    }
}
