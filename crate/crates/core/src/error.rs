use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

/// Errors shared across the boosting stack.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter failed validation.
    InvalidParameter(String),
    /// A sample pool held fewer fresh items than an operation required.
    InsufficientSamples { needed: usize, available: usize },
    /// Rejection sampling ran out of candidates before reaching its target.
    SamplesExhausted { requested: usize, accepted: usize },
    /// A reweighing function has zero mass under the base distribution.
    ZeroDensity,
    /// No candidate hypothesis reached the required weak-learning advantage.
    NoWeakHypothesis { best_error: f64, required: f64 },
    /// A boosting loop hit its iteration cap without terminating.
    IterationCapExceeded { cap: usize },
    /// Two distributions were compared over different domains.
    DomainMismatch { left: usize, right: usize },
    /// An audit precondition did not hold; the run is excluded, not failed.
    PreconditionUnmet(String),
    /// A subroutine failed inside an outer iteration.
    InIteration {
        t: usize,
        tag: &'static str,
        inner: Box<Error>,
    },
}

impl Error {
    pub fn in_iteration(t: usize, tag: &'static str, inner: Error) -> Self {
        Error::InIteration {
            t,
            tag,
            inner: Box::new(inner),
        }
    }

    /// Unwraps iteration annotations down to the root cause.
    pub fn root(&self) -> &Error {
        match self {
            Error::InIteration { inner, .. } => inner.root(),
            other => other,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::InsufficientSamples { needed, available } => {
                write!(f, "insufficient samples: need {needed}, have {available}")
            }
            Error::SamplesExhausted {
                requested,
                accepted,
            } => write!(
                f,
                "rejection sampling exhausted input after {accepted} of {requested} acceptances"
            ),
            Error::ZeroDensity => write!(f, "reweighing function has zero density"),
            Error::NoWeakHypothesis {
                best_error,
                required,
            } => write!(
                f,
                "no weak hypothesis: best error {best_error} exceeds {required}"
            ),
            Error::IterationCapExceeded { cap } => {
                write!(f, "iteration cap {cap} exceeded without termination")
            }
            Error::DomainMismatch { left, right } => {
                write!(f, "domain size mismatch: {left} vs {right}")
            }
            Error::PreconditionUnmet(msg) => write!(f, "precondition unmet: {msg}"),
            Error::InIteration { t, tag, inner } => {
                write!(f, "iteration {t} [{tag}]: {inner}")
            }
        }
    }
}

#[cfg(any(test, feature = "std"))]
impl std::error::Error for Error {}
