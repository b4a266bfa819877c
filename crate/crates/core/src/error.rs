use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series has no unit leading coefficient (leading coefficient {0})")]
    NonUnitLeading(String),
    #[error("cannot invert the zero series")]
    ZeroSeries,
    #[error("vanishing denominator in Appell-Lerch sum at r = {r}")]
    VanishingDenominator { r: i64 },
    #[error("non-integral term in Appell-Lerch sum at r = {r}")]
    NonIntegral { r: i64 },
    #[error("loop-bound certificate failed for `{name}`: {detail}")]
    LoopBound { name: String, detail: String },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precision shortfall: needed {needed}, have {have}")]
    Precision { needed: i64, have: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
