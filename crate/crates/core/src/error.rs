use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A metric component violates the signature or allowed-observer conditions.
    #[error("invalid metric: {component} = {value} ({reason})")]
    InvalidMetric {
        component: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("coordinate patch invalid at r = {r}: cos(2k ln r) = {cosine}")]
    PatchInvalid { r: f64, cosine: f64 },

    #[error("radius r = {r} is not outside the horizon (delta = {delta})")]
    InsideHorizon { r: f64, delta: f64 },

    #[error("spin |a| = {a} exceeds mass M = {mass}")]
    OverExtremal { a: f64, mass: f64 },

    /// Apparatus velocity outside the time-orientation preserving interval.
    #[error("observer not timelike: velocity {value} outside ({lower}, {upper})")]
    ObserverNotTimelike { value: f64, lower: f64, upper: f64 },

    #[error("mode outside allowed branch: normalization denominator {0} is not positive")]
    ModeOutsideBranch(f64),

    #[error("series argument x = {x} needs {terms} terms; use the massless limit")]
    SeriesRange { x: f64, terms: f64 },

    #[error("quadrature did not converge (estimate {best_estimate}, error {error_estimate})")]
    Convergence {
        best_estimate: f64,
        error_estimate: f64,
    },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable code used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "DOMAIN_ERROR",
            Error::InvalidMetric { .. } => "INVALID_METRIC",
            Error::PatchInvalid { .. } => "PATCH_INVALID",
            Error::InsideHorizon { .. } => "INSIDE_HORIZON",
            Error::OverExtremal { .. } => "OVER_EXTREMAL",
            Error::ObserverNotTimelike { .. } => "OBSERVER_NOT_TIMELIKE",
            Error::ModeOutsideBranch(_) => "MODE_OUTSIDE_BRANCH",
            Error::SeriesRange { .. } => "SERIES_RANGE",
            Error::Convergence { .. } => "CONVERGENCE",
            Error::Usage(_) => "USAGE",
            Error::Io(_) => "IO_ERROR",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
