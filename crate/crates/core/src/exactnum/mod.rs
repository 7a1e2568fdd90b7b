//! Exact scalars: big rationals and elements of towers of real quadratic
//! extensions `Q(sqrt r_1)(sqrt r_2)...`, with exact sign determination and
//! certified interval export.

mod field;
mod interval;
mod node;
mod rational;

pub use field::{ArithOp, FieldElem, Tower};
pub use interval::Interval;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use rational::{format_decimal, make_rational, rat};

/// Default bound on the number of adjoined radicands.
pub const DEFAULT_MAX_TOWER_DEPTH: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative value")]
    NegativeRadicand,
    #[error("tower depth {depth} exceeds the limit of {limit}")]
    TowerLimitExceeded { depth: usize, limit: usize },
    #[error("interval tolerance must be positive")]
    NonPositiveTolerance,
}
