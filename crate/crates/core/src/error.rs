use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A brute-force routine was asked for a size above its enumeration limit.
    #[error("{what} = {value} exceeds the enumeration limit {limit}")]
    SizeLimit {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    /// Parameters outside the range where an operation is defined or proven.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("not a path homomorphism: {0}")]
    InvalidHom(String),

    /// A lattice word left the band `0 <= #E - #N <= max_gap`.
    #[error("lattice word leaves the band 0 <= x - y <= {max_gap} after {prefix_len} steps")]
    BandViolation { prefix_len: usize, max_gap: u32 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// Two exact evaluations disagreed or an exact division had a remainder.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
