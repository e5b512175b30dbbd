use thiserror::Error;

pub type Result<T> = std::result::Result<T, LabError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LabError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole of zeta at s = 1")]
    Pole,
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("a = 0 has no phase")]
    ZeroInput,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("cost limit exceeded: {0}")]
    Cost(String),
    #[error("prime table covers {limit} but {needed} is required")]
    TableTooSmall { limit: u64, needed: u64 },
    #[error("no convergence: {0}")]
    NonConvergence(String),
    #[error("zero list covers [{lo}, {hi}] but [{need_lo}, {need_hi}] is required")]
    Coverage {
        lo: f64,
        hi: f64,
        need_lo: f64,
        need_hi: f64,
    },
    #[error("missing zeros in [{t1}, {t2}]: found {found}, expected {expected:.2}")]
    MissingZeros {
        t1: f64,
        t2: f64,
        found: usize,
        expected: f64,
    },
    #[error("|zeta(s) - a| = {value:e} on the contour near s = {re} + {im}i")]
    BoundaryProximity { re: f64, im: f64, value: f64 },
    #[error("saturated: t = {0} is at a zero ordinate")]
    Saturated(f64),
}

impl LabError {
    /// True for failures of the numerics (as opposed to rejected inputs).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            LabError::NonConvergence(_)
                | LabError::Coverage { .. }
                | LabError::MissingZeros { .. }
                | LabError::BoundaryProximity { .. }
                | LabError::Saturated(_)
        )
    }
}

pub(crate) fn ensure(cond: bool, err: impl FnOnce() -> LabError) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(err())
    }
}
