use alloc::string::String;
use core::fmt;

/// Errors produced by the set arithmetic, constructors, and search routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The input set was empty where a nonempty set is required.
    EmptySet,
    /// A fold count of zero was supplied; every fold count starts at one.
    ZeroFold,
    /// An intermediate or final value does not fit the fixed-width integer type.
    Overflow,
    /// Malformed set, element, or group literal.
    Parse { position: usize, message: String },
    /// A parameter lies outside the range an operation accepts.
    OutOfRange {
        what: &'static str,
        value: i128,
        lo: i128,
        hi: i128,
    },
    /// Any other violated precondition, described in words.
    Domain(String),
    /// An element does not belong to the group it was combined with.
    SpecMismatch,
    /// A group element of infinite order appeared where only torsion is allowed.
    InfiniteOrder,
    /// The embedding generator's order does not exceed the largest sum.
    GeneratorOrderTooSmall { order: u128, required: u128 },
    /// The candidate space exceeds the configured budget.
    BudgetExceeded { estimated: u128, budget: u64 },
    /// The search routines do not handle this group shape.
    UnsupportedGroup(String),
    /// A constructed witness failed to re-verify. Always a defect.
    Unverified { claimed: usize, actual: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySet => f.write_str("set must be nonempty"),
            Error::ZeroFold => f.write_str("fold count h must be at least 1"),
            Error::Overflow => f.write_str("arithmetic overflow in 64-bit element range"),
            Error::Parse { position, message } => {
                write!(f, "parse error at position {}: {}", position, message)
            }
            Error::OutOfRange { what, value, lo, hi } => {
                write!(f, "{} = {} outside the admissible range [{},{}]", what, value, lo, hi)
            }
            Error::Domain(msg) => f.write_str(msg),
            Error::SpecMismatch => f.write_str("element shape does not match the group"),
            Error::InfiniteOrder => {
                f.write_str("elements must have finite order (free coordinates must be zero)")
            }
            Error::GeneratorOrderTooSmall { order, required } => write!(
                f,
                "generator order {} does not exceed h*diameter = {}",
                order, required
            ),
            Error::BudgetExceeded { estimated, budget } => write!(
                f,
                "estimated {} candidate sets exceeds the budget of {}",
                estimated, budget
            ),
            Error::UnsupportedGroup(msg) => write!(f, "unsupported group: {}", msg),
            Error::Unverified { claimed, actual } => write!(
                f,
                "witness claims size {} but recomputes to {}",
                claimed, actual
            ),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn out_of_range<T: Into<i128>>(what: &'static str, value: T, lo: T, hi: T) -> Error {
    Error::OutOfRange {
        what,
        value: value.into(),
        lo: lo.into(),
        hi: hi.into(),
    }
}
