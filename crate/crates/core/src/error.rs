use thiserror::Error;

/// Errors raised while building or comparing series.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot invert a series that is zero to its known precision")]
    InversionOfZero,

    #[error("insufficient precision: need order {needed}, have {available}")]
    InsufficientPrecision { needed: i64, available: i64 },

    #[error("coefficient of q^{exponent} requested beyond precision {prec}")]
    BeyondPrecision { exponent: i64, prec: i64 },

    #[error("q-Pochhammer pole: factor {factor} of a negative-index product vanishes identically")]
    PochhammerPole { factor: String },

    #[error("denominator vanishes identically: {0}")]
    DenominatorPole(String),

    #[error("summation bound did not reach order {order} within {cap} terms")]
    NonterminatingBound { order: i64, cap: i64 },

    #[error("term {n} has valuation {actual} below its published bound {bound}")]
    ValuationBoundViolated { n: i64, actual: i64, bound: i64 },

    #[error("inexact polynomial division")]
    InexactDivision,

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("m = {m} is outside the domain of `{id}` ({domain})")]
    OutOfDomain { id: String, m: i64, domain: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
