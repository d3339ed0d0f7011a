use thiserror::Error;

/// Errors shared by all engine modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index computation left the fixed-width integer range. Arithmetic is
    /// checked everywhere; wraparound is never allowed to stand in for a value.
    #[error("arithmetic overflow")]
    ArithmeticOverflow,

    /// An operation defined only on idempotents was given a non-idempotent.
    #[error("expected an idempotent, got ({0}, {1})")]
    NotIdempotent(i64, i64),

    /// Element lies outside the corner subsemigroup used for the bicyclic embedding.
    #[error("element ({a}, {b}) lies outside the corner at {n}")]
    OutsideCorner { n: i64, a: i64, b: i64 },

    /// Window bounds are inverted.
    #[error("invalid window: lo {lo} > hi {hi}")]
    InvalidWindow { lo: i64, hi: i64 },

    /// A saturation generator does not lie inside the window it is saturated over.
    #[error("generator ({a}, {b}) outside saturation window [{lo}, {hi}]")]
    GeneratorOutsideWindow { a: i64, b: i64, lo: i64, hi: i64 },

    /// Queried an element against a partition over a window it does not belong to.
    #[error("element ({a}, {b}) outside partition window")]
    OutsidePartition { a: i64, b: i64 },

    /// An element required to lie inside a window does not.
    #[error("element ({a}, {b}) outside window [{lo}, {hi}]")]
    OutsideWindow { a: i64, b: i64, lo: i64, hi: i64 },

    /// The subgroup parameter of the cyclic-generator computation must be positive.
    #[error("subgroup parameter must be positive, got {0}")]
    NonPositiveSubgroup(i64),

    /// Model parameters violate their side conditions (divisor, sequence shape, ...).
    #[error("invalid model parameters: {0}")]
    ModelParam(String),

    /// An element sort that does not exist in the given model.
    #[error("element sort {elem} is not valid in model {model}")]
    InvalidSort { model: String, elem: String },

    /// Text that does not parse as an element or model.
    #[error("parse error: {0}")]
    Parse(String),

    /// A neighborhood center of the wrong sort.
    #[error("invalid neighborhood center: {0}")]
    InvalidCenter(String),

    /// Law parameters violate the law's side conditions. Distinct from a law
    /// failure: the law was never evaluated.
    #[error("law parameter error: {0}")]
    LawParam(String),

    /// A candidate neighborhood that does not contain its own center.
    #[error("candidate neighborhood does not contain ({0}, {0})")]
    CenterMissing(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
