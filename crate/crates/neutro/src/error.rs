use thiserror::Error;

use crate::bifuzzy::PairKind;

/// Errors produced by constructors and checked operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A component left the unit interval. Bounds are exact: no epsilon
    /// slack, no clamping.
    #[error("{component} = {value} is outside [0, 1]")]
    OutOfRange { component: &'static str, value: f64 },

    /// A pair's components violate the sign condition of its declared kind.
    #[error("pair ({mu}, {nu}) violates the {kind} constraint (mu + nu - 1 = {delta})")]
    KindMismatch {
        kind: PairKind,
        mu: f64,
        nu: f64,
        delta: f64,
    },

    /// A two-pair operation received pairs of different kinds.
    #[error("pair kinds differ: {left} vs {right}")]
    MixedKinds { left: PairKind, right: PairKind },

    /// Finite differences along |tau| are undefined at the tau = 0 kink.
    #[error("finite differences are degenerate at tau = 0")]
    DegenerateInput,

    /// Lattice step must lie in (0, 1] and divide the unit interval.
    #[error("grid step {0} does not produce a lattice covering [0, 1]")]
    InvalidGridStep(f64),

    /// Finite-difference step must lie in (0, 0.01].
    #[error("finite-difference step {0} is outside (0, 0.01]")]
    InvalidFdStep(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
