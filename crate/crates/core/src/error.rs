use thiserror::Error;

use crate::seedcalc::Violation;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root system {letter}{rank}")]
    UnsupportedType { letter: String, rank: usize },

    #[error("letter {letter} out of range 1..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },

    #[error("word {0} is not reduced")]
    NotReduced(String),

    #[error("element with reduced word {0} is not fully commutative")]
    NotFullyCommutative(String),

    #[error("element with reduced word {0} is not dominant minuscule")]
    NotDominantMinuscule(String),

    #[error("{numerator} is not divisible by {divisor}")]
    NotDivisible { numerator: String, divisor: String },

    #[error("no letter realises root {root} after prefix {prefix}; the order is not convex")]
    ConstructionFailed { prefix: String, root: String },

    #[error("word {0} is not a reduced word of the longest element")]
    NotLongestElement(String),

    #[error("no braid move (p,q,p) with p.q = -1 at position {position} of {word}")]
    BadBraidPosition { word: String, position: usize },

    #[error("no commutation move at position {position} of {word}")]
    BadCommutePosition { word: String, position: usize },

    #[error("property violation: {0}")]
    PropertyViolation(Box<Violation>),

    #[error("flag minor {key} received two values: {first} and {second}")]
    KeyInconsistency {
        key: String,
        first: String,
        second: String,
    },

    #[error("no cuspidal value available at position {position}: {reason}")]
    CuspidalUnavailable { position: usize, reason: String },

    #[error("value out of range: {0}")]
    Range(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("table checksum mismatch: expected {expected}, found {found}")]
    Checksum { expected: String, found: String },
}

pub type Result<T> = std::result::Result<T, Error>;
