//! Error and warning types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a precondition (non-positive time constant,
    /// degenerate grid span, mismatched lengths, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Two envelopes or grids that must share an axis do not.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// A grid is too coarse or too short to resolve the requested physics.
    /// The message carries a remediation hint.
    #[error("resolution error: {0}")]
    Resolution(String),

    /// A pulse or window is truncated by the grid it was asked to live on.
    #[error("containment error: {0}")]
    Containment(String),

    /// A joint amplitude was filtered twice.
    #[error("state error: joint amplitude has already been filtered")]
    AlreadyFiltered,

    /// A herald instant with negligible detection probability was requested.
    #[error("no-herald error: idler detection at t' = {instant} has negligible probability (slice norm {norm:.3e})")]
    NoHerald { instant: f64, norm: f64 },

    /// Failure reading or parsing an external file (tabulated filter tables).
    #[error("table error: {0}")]
    Table(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Non-fatal diagnostics attached to results.
#[derive(Debug, Clone, PartialEq)]
pub enum Warning {
    /// A spectrum had not decayed below the aliasing threshold at the band
    /// edges before transforming to the time domain.
    Aliasing { edge_fraction: f64 },
    /// A requested herald instant was snapped to the nearest grid sample.
    OffGridHerald { requested: f64, snapped: f64 },
    /// A width-ratio estimate was evaluated outside its validity regime.
    EstimateOutOfRegime { ratio: f64 },
}

impl std::fmt::Display for Warning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Warning::Aliasing { edge_fraction } => write!(
                f,
                "spectrum magnitude at band edge is {edge_fraction:.2e} of peak; \
                 time-domain result may be aliased"
            ),
            Warning::OffGridHerald { requested, snapped } => write!(
                f,
                "herald instant {requested} is off-grid; snapped to {snapped}"
            ),
            Warning::EstimateOutOfRegime { ratio } => write!(
                f,
                "width ratio {ratio:.3} exceeds 1; estimate clamped"
            ),
        }
    }
}

/// A value plus any warnings produced while computing it.
#[derive(Debug, Clone)]
pub struct Warned<T> {
    pub value: T,
    pub warnings: Vec<Warning>,
}

impl<T> Warned<T> {
    pub fn clean(value: T) -> Self {
        Self { value, warnings: Vec::new() }
    }

    pub fn with(value: T, warnings: Vec<Warning>) -> Self {
        Self { value, warnings }
    }

    pub fn is_clean(&self) -> bool {
        self.warnings.is_empty()
    }

    /// Discard warnings and keep the value.
    pub fn into_value(self) -> T {
        self.value
    }
}
