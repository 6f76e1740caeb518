//! Error type shared by all modules, plus the desk-scale capacity guard.

use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Input text could not be parsed in the documented format.
    #[error("parse error: {0}")]
    Parse(String),

    /// A window failed the group element invariants.
    #[error("invalid window: {0}")]
    InvalidWindow(String),

    /// A shape or tableau failed its structural invariants.
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    /// Operands live in different ambient dimensions.
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    /// An operation required equal total degrees.
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    /// The input is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested size exceeds the desk-scale bound for the operation.
    #[error(
        "capacity exceeded: {what} = {value} is beyond the desk bound {bound} \
         (set COINV_MAX_N to raise the limit at your own risk)"
    )]
    Capacity {
        what: &'static str,
        value: usize,
        bound: usize,
    },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Desk bound check: `value` must be at most `bound`, where `bound` can be
/// raised (never lowered) via the `COINV_MAX_N` environment variable.
pub(crate) fn check_capacity(what: &'static str, value: usize, bound: usize) -> Result<()> {
    let bound = effective_bound(bound);
    if value > bound {
        Err(Error::Capacity { what, value, bound })
    } else {
        Ok(())
    }
}

fn effective_bound(bound: usize) -> usize {
    match std::env::var("COINV_MAX_N") {
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(raised) => bound.max(raised),
            Err(_) => bound,
        },
        Err(_) => bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn capacity_error_mentions_offending_value() {
        let err = check_capacity("n", 9, 8).unwrap_err();
        let text = err.to_string();
        assert!(text.contains("n = 9"));
        assert!(text.contains("bound 8"));
    }

    #[test]
    fn within_bound_is_ok() {
        assert!(check_capacity("n", 8, 8).is_ok());
        assert!(check_capacity("n", 0, 8).is_ok());
    }
}
