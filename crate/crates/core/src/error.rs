use thiserror::Error;

/// Errors raised by the library.
///
/// Mismatches found by the verification sweeps are *not* errors; they are
/// reported as data. `Consistency` is reserved for states that can only arise
/// from a bug in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("parts must be weakly decreasing, but part {index} is {left} and part {} is {right}", index + 1)]
    Order {
        index: usize,
        left: usize,
        right: usize,
    },

    #[error("hook index k={k} out of range 0..{n}")]
    HookRange { n: usize, k: i64 },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("{op} requires n >= {min}, got n={n}")]
    TooSmall {
        op: &'static str,
        n: usize,
        min: usize,
    },

    #[error("{what} of size {n} exceeds the configured ceiling {max}")]
    Ceiling {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("non-integral result in {0}")]
    NonIntegral(&'static str),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) trait CheckedExt: Sized {
    fn or_overflow(self, ctx: &'static str) -> Result<i64>;
}

impl CheckedExt for Option<i64> {
    #[inline]
    fn or_overflow(self, ctx: &'static str) -> Result<i64> {
        self.ok_or(Error::Overflow(ctx))
    }
}

/// Narrow an `i128` accumulator back to `i64`.
#[inline]
pub(crate) fn narrow(v: i128, ctx: &'static str) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow(ctx))
}
