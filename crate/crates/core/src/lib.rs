//! Validated numerics for the convexity and rotation questions of
//! alpha-patch boundaries.

pub mod curves;
pub mod error;
pub mod integrands;
pub mod interval;
pub mod jet;
pub mod pipeline;
pub mod quadrature;
pub mod sign;

pub use error::{Error, Result};
pub use interval::{Interval, IntervalError, SignOutcome};
pub use jet::{Jet4, Scalar};
