use core::fmt;

/// Errors raised by the solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The run configuration is unusable (zero domain, domain too large for
    /// the integer widths in use, ...).
    InvalidConfig(&'static str),
    /// A table or bitset of `bytes` bytes could not be allocated.
    Resource { what: &'static str, bytes: usize },
    /// An argument lies outside the range a precomputed table covers.
    OutOfRange { value: u64, limit: u64 },
    /// An internal consistency check failed. Indicates a bug or violated
    /// precondition, never a normal outcome.
    Inconsistent(&'static str),
    /// A brute-force enumeration was asked for a domain above its ceiling.
    OracleCeiling { domain: u32, ceiling: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            Error::Resource { what, bytes } => {
                write!(f, "cannot allocate {bytes} bytes for {what}")
            }
            Error::OutOfRange { value, limit } => {
                write!(f, "value {value} outside supported range 1..={limit}")
            }
            Error::Inconsistent(msg) => write!(f, "internal inconsistency: {msg}"),
            Error::OracleCeiling { domain, ceiling } => write!(
                f,
                "brute-force oracle refuses domain {domain} (ceiling {ceiling})"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

/// Allocates a zero-filled vector, reporting allocation failure instead of
/// aborting.
pub(crate) fn try_zeroed<T: Clone + Default>(
    len: usize,
    what: &'static str,
) -> Result<alloc::vec::Vec<T>> {
    let mut v = alloc::vec::Vec::new();
    v.try_reserve_exact(len).map_err(|_| Error::Resource {
        what,
        bytes: len.saturating_mul(core::mem::size_of::<T>()),
    })?;
    v.resize(len, T::default());
    Ok(v)
}
