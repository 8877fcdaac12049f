use thiserror::Error;

use crate::domain::GuardOutcome;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Domain(String),
    #[error("unscaled result not representable ({0:?}); use scaled mode")]
    Range(GuardOutcome),
    #[error("{method}: no convergence after {iterations} iterations")]
    NoConvergence {
        method: &'static str,
        iterations: usize,
    },
    #[error("{method}: expansion not accurate enough (smallest term {smallest:e} relative)")]
    AccuracyLoss { method: &'static str, smallest: f64 },
    #[error("{method}: point outside the validity region")]
    OutOfValidity { method: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
