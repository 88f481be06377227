use thiserror::Error;

use crate::interval::{Interval, IntervalError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error("{0} is not inside an endpoint zone")]
    ZoneViolation(Interval),
    #[error("tangent speed enclosure {0} touches zero")]
    DegenerateTangent(Interval),
    #[error("alpha interval {0} straddles a regime boundary at {1}")]
    StraddlesBoundary(Interval, f64),
    #[error("integrand not evaluable on {0}")]
    NonEvaluable(Interval),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
