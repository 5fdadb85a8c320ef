use thiserror::Error;

/// Errors raised by the algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),

    #[error("division by zero")]
    DivisionByZero,

    #[error("series truncation mismatch: cap {0} vs {1}")]
    CapMismatch(usize, usize),

    #[error("group shape mismatch: (n={0}, l={1}) vs (n={2}, l={3})")]
    GroupMismatch(usize, u32, usize, u32),

    #[error("parameter mismatch between algebra elements")]
    ParamMismatch,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("point is not in the regular locus")]
    NotRegular,

    #[error("singular matrix at vertex {0}")]
    Singular(usize),

    #[error("element is not invariant under the symmetrising idempotent")]
    NotSpherical,

    #[error("rewriting exceeded its fuel budget ({0} steps)")]
    FuelExhausted(usize),

    #[error("resource guard exceeded: {needed} monomials > limit {limit}")]
    SizeGuard { needed: u128, limit: u128 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
