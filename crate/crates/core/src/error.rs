use thiserror::Error;

/// Errors raised by the graph builders and counting engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A numeric parameter fell outside its admissible range.
    #[error("parameter `{name}` = {value} violates bound {bound}")]
    ParameterDomain {
        name: &'static str,
        value: i64,
        bound: &'static str,
    },

    /// An edge list does not describe a simple graph.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// The input is larger than the operation's size guard allows.
    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    SizeGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    /// The operation requires a connected graph.
    #[error("graph is disconnected")]
    Disconnected,

    /// An enumeration would produce more trees than the configured cap.
    #[error("enumeration cap of {cap} trees exceeded")]
    CapExceeded { cap: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_at_least(name: &'static str, value: i64, min: i64, bound: &'static str) -> Result<()> {
    if value < min {
        Err(Error::ParameterDomain { name, value, bound })
    } else {
        Ok(())
    }
}
