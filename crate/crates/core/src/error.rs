use alloc::string::String;
use core::fmt;

use crate::algebra::Level;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    EmptyAlphabet,
    DuplicateSymbol(String),
    /// A symbol id outside the alphabet.
    ForeignSymbol(u16),
    /// A token that names no alphabet letter.
    UnknownToken(String),
    InvalidPresentation(String),
    /// The presentation admits no infinite point.
    EmptyShift,
    /// A query needs a word of the language.
    NotInLanguage(String),
    /// `k <= l` is required.
    InvalidLevel {
        k: usize,
        l: usize,
    },
    /// An element cannot be re-expressed at the requested level.
    LevelTooShallow {
        have: Level,
        need: Level,
    },
    /// Operands live at different levels and the operation does not promote.
    LevelMismatch {
        left: Level,
        right: Level,
    },
    /// Too many atoms at a level; see the atom cap.
    LevelOverflow {
        level: Level,
        atoms: usize,
        cap: usize,
    },
    /// An indicator (0/1 coefficients) was expected.
    NotIndicator,
    /// A correspondence component does not lie in its ideal `D̃_a`.
    ComponentCondition(u16),
    /// A block code or conjugacy is not what it claims to be.
    InvalidCode(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyAlphabet => f.write_str("alphabet is empty"),
            Error::DuplicateSymbol(s) => write!(f, "duplicate symbol {s:?}"),
            Error::ForeignSymbol(s) => write!(f, "symbol id {s} is not in the alphabet"),
            Error::UnknownToken(s) => write!(f, "unknown symbol {s:?}"),
            Error::InvalidPresentation(s) => write!(f, "invalid presentation: {s}"),
            Error::EmptyShift => f.write_str("presentation has no infinite points"),
            Error::NotInLanguage(s) => write!(f, "word {s} is not in the language"),
            Error::InvalidLevel { k, l } => write!(f, "invalid level ({k},{l}): need k <= l"),
            Error::LevelTooShallow { have, need } => {
                write!(f, "level {have} is too shallow, need at least {need}")
            }
            Error::LevelMismatch { left, right } => {
                write!(f, "operands live at different levels {left} and {right}")
            }
            Error::LevelOverflow { level, atoms, cap } => {
                write!(f, "level {level} has {atoms} atoms, above the cap of {cap}")
            }
            Error::NotIndicator => f.write_str("element is not an indicator function"),
            Error::ComponentCondition(a) => {
                write!(
                    f,
                    "component for symbol {a} is not supported on sigma(C(a))"
                )
            }
            Error::InvalidCode(s) => write!(f, "invalid block code: {s}"),
        }
    }
}

impl core::error::Error for Error {}
