use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument outside the operation's domain (nonpositive radius,
    /// undersized quadrature order, negative degree, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An input polynomial that is required to be Heisenberg-homogeneous is not.
    #[error("polynomial is not homogeneous: degrees {0:?} present")]
    NotHomogeneous(Vec<u32>),

    /// An integrand evaluated to NaN or infinity at a quadrature node.
    #[error("non-finite integrand value {value} at node ({x}, {y}, {t})")]
    NonFinite { x: f64, y: f64, t: f64, value: f64 },

    /// A caller-side precondition failed (e.g. a sample not on the zero level).
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
