use core::fmt;

/// Error type shared by every fallible operation in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// A generator list was empty.
    EmptyInput,
    /// A generator list contained 0, which generates nothing.
    ZeroGenerator,
    /// The generators share a common factor, so the complement is infinite.
    GcdNotOne { gcd: u64 },
    /// A residue-class query was made for a value outside the monoid.
    NotAMember { value: u64 },
    /// Apery sets are indexed by residues modulo a positive member.
    ZeroModulus,
    /// An omission index fell outside the permitted interior range.
    IndexOutOfRange { index: u64, lo: u64, hi: u64 },
    /// The operation needs a longer generator progression than this monoid has.
    WTooSmall { w: u64, min: u64 },
    /// The factorization enumeration exceeded its node budget.
    OracleTooLarge { budget: u64 },
}

impl Error {
    /// Stable machine-readable name, used verbatim on the CLI diagnostic stream.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::ZeroGenerator => "ZeroGenerator",
            Error::GcdNotOne { .. } => "GcdNotOne",
            Error::NotAMember { .. } => "NotAMember",
            Error::ZeroModulus => "ZeroModulus",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::WTooSmall { .. } => "WTooSmall",
            Error::OracleTooLarge { .. } => "OracleTooLarge",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyInput => write!(f, "generator list is empty"),
            Error::ZeroGenerator => write!(f, "generator list contains 0"),
            Error::GcdNotOne { gcd } => {
                write!(f, "generators share the common factor {gcd}")
            }
            Error::NotAMember { value } => write!(f, "{value} is not an element of the monoid"),
            Error::ZeroModulus => write!(f, "Apery sets need a positive modulus"),
            Error::IndexOutOfRange { index, lo, hi } => {
                write!(f, "omission index {index} outside {lo}..={hi}")
            }
            Error::WTooSmall { w, min } => {
                write!(
                    f,
                    "progression length w = {w} is below the required minimum {min}"
                )
            }
            Error::OracleTooLarge { budget } => {
                write!(f, "enumeration exceeded the node budget of {budget}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
