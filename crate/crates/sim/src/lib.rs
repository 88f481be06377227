//! Spectral contour dynamics for alpha-patch boundaries.

pub mod diagnostics;
pub mod evolve;
pub mod output;
pub mod spectral;
pub mod state;
pub mod velocity;

pub use diagnostics::{diagnostics, Diagnostics};
pub use evolve::{evolve, Evolution};
pub use spectral::spectral_derivative;
pub use state::{InitialCurve, SimConfig, SimState};
pub use velocity::{velocity, VelocityOperator};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimError {
    #[error("arc-chord ratio {value:e} fell below {floor:e} at t = {t}")]
    ArcChordCollapse { t: f64, value: f64, floor: f64 },
    #[error("step size {h:e} underflowed at t = {t}")]
    StepSizeUnderflow { t: f64, h: f64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
