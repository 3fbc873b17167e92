use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by the zero element of Q(\u{3bb})")]
    DivisionByZero,
    #[error("pole: denominator vanishes at \u{3bb} = {0}")]
    Pole(String),
    #[error("series reciprocal needs a unit constant term")]
    NonUnitSeries,
}
