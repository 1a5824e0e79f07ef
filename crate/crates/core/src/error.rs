use thiserror::Error;

/// Failure modes shared by every algorithm in the crate.
///
/// `InternalTheoremViolation` is raised whenever a structural guarantee that
/// should hold by construction is observed to fail at runtime. It never
/// accompanies a returned certificate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal theorem violation: {0}")]
    InternalTheoremViolation(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("input is not planar: {0}")]
    NotPlanarEvidence(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! violation {
    ($($arg:tt)*) => {
        $crate::error::Error::InternalTheoremViolation(format!($($arg)*))
    };
}

macro_rules! invalid {
    ($($arg:tt)*) => {
        $crate::error::Error::InvalidInput(format!($($arg)*))
    };
}

pub(crate) use invalid;
pub(crate) use violation;
