use thiserror::Error;

use crate::states::Space;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension D = {0} is below 2")]
    DimensionTooSmall(i64),

    #[error("quantum numbers out of range: n = {n}, l = {l} (need n >= 1 and 0 <= l <= n-1)")]
    QuantumNumberOutOfRange { n: i64, l: i64 },

    #[error("nuclear charge Z = {0} must be positive and finite")]
    NonpositiveCharge(f64),

    #[error("order alpha = {alpha} outside the {space} domain {interval}")]
    OrderOutOfDomain {
        space: Space,
        alpha: f64,
        interval: Interval,
    },

    #[error("order alpha = {alpha} outside the asymptotic regime: {constraint}")]
    OrderOutOfRegime { alpha: f64, constraint: String },

    #[error("closed form is singular for this state: {0}")]
    SingularDenominator(String),

    #[error("float summation lost too much to cancellation (relative bound {relative_bound:.3e})")]
    CancellationOverflow { relative_bound: f64 },

    #[error("exact evaluation unavailable: {0}")]
    ExactUnavailable(String),

    #[error("argument {0} must be positive")]
    NonpositiveArgument(f64),

    #[error("unsupported argument: {0}")]
    UnsupportedArgument(String),

    #[error("bottom parameter #{index} = {value} produces a pole before the series terminates")]
    PoleInBottomParameter { index: usize, value: String },

    #[error("series does not terminate: first upper parameter must be a non-positive integer")]
    NonTerminating,

    #[error("state with n = {n}, l = {l} is not circular (l = n-1 required)")]
    NotCircular { n: u32, l: u32 },

    #[error("state with l = {0} is not an S-wave state")]
    NotSWave(u32),

    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),

    #[error("parameter {name} = {value} out of range")]
    ParameterOutOfRange { name: &'static str, value: f64 },

    #[error("parameters must be positive: {0}")]
    NonpositiveParameters(String),

    #[error("evaluation routes disagree: {0}")]
    RouteMismatch(String),
}

impl Error {
    /// Whether the error stems from a domain or regime violation rather than a
    /// numerical breakdown.
    pub fn is_domain_violation(&self) -> bool {
        matches!(
            self,
            Error::DimensionTooSmall(_)
                | Error::QuantumNumberOutOfRange { .. }
                | Error::NonpositiveCharge(_)
                | Error::OrderOutOfDomain { .. }
                | Error::OrderOutOfRegime { .. }
                | Error::SingularDenominator(_)
                | Error::NotCircular { .. }
                | Error::NotSWave(_)
                | Error::NonpositiveParameters(_)
                | Error::ParameterOutOfRange { .. }
        )
    }
}

/// Open interval `(lower, upper)`; `upper = None` means unbounded above.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lower: f64,
    pub upper: Option<f64>,
}

impl Interval {
    pub fn contains(&self, x: f64) -> bool {
        x > self.lower && self.upper.map_or(true, |u| x < u)
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.upper {
            Some(u) => write!(f, "({}, {})", self.lower, u),
            None => write!(f, "({}, +inf)", self.lower),
        }
    }
}
