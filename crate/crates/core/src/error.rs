use thiserror::Error;

/// Errors shared by every layer of the crate.
///
/// Domain violations (a parameter outside an operation's stated domain) are
/// kept distinct from census failures: predicates return `Ok(false)` when the
/// object is well-formed but the property does not hold, and `Err(..)` when
/// the question itself is malformed.
#[derive(Debug, Error)]
pub enum Error {
    #[error("group factor {0} is invalid; every factor must be at least 2")]
    InvalidFactor(u64),

    #[error("group order overflows the supported range")]
    OrderOverflow,

    #[error("groups differ: {0} vs {1}")]
    GroupMismatch(String, String),

    #[error("alphabets differ: {0} vs {1}")]
    AlphabetMismatch(&'static str, &'static str),

    #[error("array has alphabet {got}, operation requires {want}")]
    WrongAlphabet {
        want: &'static str,
        got: &'static str,
    },

    #[error("value table of length {got} does not match group order {want}")]
    LengthMismatch { got: usize, want: usize },

    #[error("array values do not lie in the {0} alphabet")]
    InvalidValues(&'static str),

    #[error("coefficient arithmetic overflowed during {0}")]
    Overflow(&'static str),

    #[error("{0} and {1} are not isomorphic by coprime cyclic realignment")]
    NotCrtIsomorphic(String, String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field order {q} exceeds the table cap {cap}")]
    FieldTooLarge { q: u64, cap: u64 },

    #[error("element {elem} has multiplicative order {order}, not {want}; it is not primitive")]
    NotPrimitive { elem: u64, order: u64, want: u64 },

    #[error("{0} does not divide {1}")]
    NotADivisor(u64, u64),

    #[error(
        "q = {0} has no proper representation q = s\u{b2} + 4t\u{b2} with s \u{2261} 1 (mod 4)"
    )]
    NoProperRepresentation(u64),

    #[error("precondition violated: {0}")]
    Domain(String),

    #[error("construction {family} failed checks: {failed:?}")]
    ConstructionFailed { family: String, failed: Vec<String> },

    #[error("search space infeasible: {0}")]
    Infeasible(String),

    #[error("malformed {what}: {detail}")]
    Parse { what: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for `Error::Domain` with a formatted message.
macro_rules! domain_err {
    ($($arg:tt)*) => {
        $crate::error::Error::Domain(format!($($arg)*))
    };
}

pub(crate) use domain_err;
