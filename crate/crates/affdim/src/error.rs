use std::fmt;

/// Errors surfaced by parsing, validation, and the numerical pipeline.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input document is malformed (JSON syntax or schema violation).
    Parse(String),
    /// The map at this index has zero determinant.
    SingularMap(usize),
    /// The map at this index contains a non-finite entry.
    NonFiniteEntry(usize),
    /// Some maps carry a translation and the map at this index does not (or vice versa).
    TranslationMismatch(usize),
    /// A system must contain at least one map.
    EmptySystem,
    /// A word referenced a letter outside the system's alphabet.
    WordIndexOutOfRange { index: usize, alphabet: usize },
    /// The singular value function is only defined for s >= 0.
    NegativeExponent(f64),
    /// Series arithmetic requires operands of equal truncation order.
    OrderMismatch { left: usize, right: usize },
    /// Series log/pow needs a constant term in the open right half plane.
    LogDomain { re: f64, im: f64 },
    /// Series overflowed (constant term too large for exp).
    Overflow,
    /// Series evaluation point lies outside the open unit disc of the scaled variable.
    EvalOutsideDisc(f64),
    /// A standing hypothesis failed; `condition` is one of "i", "ii", "iii".
    OmegaViolated {
        condition: &'static str,
        map_index: usize,
        margin: f64,
    },
    /// The parameter s is outside the range the operator construction covers.
    SOutOfRange(f64),
    /// No invariant cone could be certified; `status` echoes the cone search outcome.
    ConeNotFound { status: &'static str },
    /// The family could not be certified contracting.
    NotContracting { bound: f64 },
    /// Word enumeration would exceed the hard cap.
    WordCapExceeded { words: f64, cap: f64 },
    /// Chaos-game sampling needs translation vectors.
    MissingTranslations,
    /// A perturbed system lost a validity margin; refuse rather than differentiate garbage.
    MarginLost {
        condition: &'static str,
        map_index: usize,
        margin: f64,
    },
    /// Configuration value out of its documented range.
    InvalidConfig(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::SingularMap(i) => write!(f, "map {i} singular"),
            Error::NonFiniteEntry(i) => write!(f, "map {i} has a non-finite entry"),
            Error::TranslationMismatch(i) => {
                write!(f, "map {i}: translation present on some maps but not all")
            }
            Error::EmptySystem => write!(f, "system has no maps"),
            Error::WordIndexOutOfRange { index, alphabet } => {
                write!(f, "word letter {index} out of range for alphabet of size {alphabet}")
            }
            Error::NegativeExponent(s) => write!(f, "negative exponent s = {s}"),
            Error::OrderMismatch { left, right } => {
                write!(f, "series order mismatch: {left} vs {right}")
            }
            Error::LogDomain { re, im } => {
                write!(f, "log domain error: constant term {re}+{im}i not in right half plane")
            }
            Error::Overflow => write!(f, "series range error: exp overflow"),
            Error::EvalOutsideDisc(r) => {
                write!(f, "evaluation point modulus {r} >= 1 is outside the disc model")
            }
            Error::OmegaViolated {
                condition,
                map_index,
                margin,
            } => write!(
                f,
                "hypothesis ({condition}) violated at map {map_index} (margin {margin:e})"
            ),
            Error::SOutOfRange(s) => write!(f, "s = {s} outside the operator range [0, 2]"),
            Error::ConeNotFound { status } => {
                write!(f, "no common invariant cone certified (status: {status})")
            }
            Error::NotContracting { bound } => {
                write!(f, "system not certified contracting (best bound {bound})")
            }
            Error::WordCapExceeded { words, cap } => {
                write!(f, "word enumeration of {words:.0} products exceeds cap {cap:.0}")
            }
            Error::MissingTranslations => write!(f, "system has no translation vectors"),
            Error::MarginLost {
                condition,
                map_index,
                margin,
            } => write!(
                f,
                "perturbation lost hypothesis ({condition}) margin at map {map_index} (margin {margin:e})"
            ),
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
