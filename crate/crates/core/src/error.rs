use alloc::string::String;
use core::fmt;

/// Failure modes shared by every operation in the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Input outside the domain of the operation (non-dominant weight, bad label, ...).
    Domain(String),
    /// The certifier does not apply to this input (for example an E-representation).
    NotApplicable(String),
    /// A theorem's rank hypothesis is not met.
    OutOfRange(String),
    /// Family or operation not handled.
    Unsupported(String),
    /// A certificate step could not be completed or one of its checks failed.
    CertificationFailed(String),
    /// A verification report contains a failing check.
    VerificationFailed(String),
    /// Enumeration bound exceeded.
    Resource(String),
    /// Fixed-width intermediate overflowed.
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::NotApplicable(m) => write!(f, "not applicable: {m}"),
            Error::OutOfRange(m) => write!(f, "out of range: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
            Error::CertificationFailed(m) => write!(f, "certification failed: {m}"),
            Error::VerificationFailed(m) => write!(f, "verification failed: {m}"),
            Error::Resource(m) => write!(f, "resource bound exceeded: {m}"),
            Error::Overflow => write!(f, "arithmetic overflow"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! domain {
    ($($arg:tt)*) => { $crate::error::Error::Domain(alloc::format!($($arg)*)) };
}
pub(crate) use domain;
