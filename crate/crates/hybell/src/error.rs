use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid {what}: {details}")]
    InvalidInput { what: &'static str, details: String },

    /// Balanced homodyne symbols at s = 0 degenerate to a Dirac delta and are
    /// not representable as pointwise functions.
    #[error("ordering parameter s = {s} is outside (0, 1]: the s -> 0 limit of the balanced homodyne symbol is a Dirac delta")]
    DeltaOrderingLimit { s: f64 },

    #[error("quadrature did not converge within the panel budget: estimate {estimate}, error bound {error_bound}")]
    QuadratureNonConvergence { estimate: f64, error_bound: f64 },

    #[error("behavior is not local: violation margin {violation} > 0")]
    NotLocal { violation: f64 },

    /// The balance equation fixing the mixing parameter has a vanishing
    /// denominator while the numerator stays finite.
    #[error("mixing parameter is undefined: <M>_1 - <m>_2 = {denominator} vanishes while <M>_2 - <m>_1 = {numerator} does not")]
    DegenerateKappa { numerator: f64, denominator: f64 },

    #[error("marginal density vanishes at the requested point (value {value})")]
    VanishingMarginal { value: f64 },

    #[error("test-function settings do not match the behavior: {details}")]
    SettingsMismatch { details: String },

    #[error("homogeneous component C{index} has a nonzero line marginal {value} (tolerance {tolerance})")]
    NonzeroLineMarginal {
        index: String,
        value: f64,
        tolerance: f64,
    },

    #[error("no feasible point satisfies the marginal-floor constraint")]
    NoFeasiblePoint,

    #[error("optimizer did not converge: best value {best}")]
    OptimizerNonConvergence { best: f64 },
}

impl Error {
    pub fn invalid(what: &'static str, details: impl Into<String>) -> Self {
        Error::InvalidInput {
            what,
            details: details.into(),
        }
    }
}
