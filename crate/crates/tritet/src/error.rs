//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument fell outside its mathematical domain.
    Domain(String),
    /// A triangle row had the wrong number of entries.
    Shape {
        row: usize,
        expected: usize,
        found: usize,
    },
    /// A triangle, seed list, or tetrahedron is too small for the request.
    Insufficient {
        what: &'static str,
        required: usize,
        available: usize,
    },
    /// An index was outside its valid range; `range` describes the valid one.
    IndexRange {
        what: &'static str,
        range: String,
    },
    /// A theorem hypothesis is not met, so the verifier refuses to run.
    Hypothesis(&'static str),
    /// A b-file line could not be parsed.
    Parse {
        line: usize,
        message: String,
    },
    /// b-file indices must increase by exactly one.
    NonConsecutive {
        line: usize,
        expected: i64,
        found: i64,
    },
    /// A b-file was compared against a record with a different OEIS id.
    IdMismatch {
        expected: String,
        found: String,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Shape {
                row,
                expected,
                found,
            } => write!(
                f,
                "shape error: row {row} must have {expected} entries, found {found}"
            ),
            Error::Insufficient {
                what,
                required,
                available,
            } => write!(f, "insufficient {what}: need {required}, have {available}"),
            Error::IndexRange { what, range } => {
                write!(f, "{what} out of range; valid range: {range}")
            }
            Error::Hypothesis(h) => write!(f, "hypothesis not met: {h}"),
            Error::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
            Error::NonConsecutive {
                line,
                expected,
                found,
            } => write!(
                f,
                "format error at line {line}: non-consecutive index (expected {expected}, found {found})"
            ),
            Error::IdMismatch { expected, found } => {
                write!(f, "b-file id mismatch: record is {expected}, b-file is {found}")
            }
        }
    }
}

impl core::error::Error for Error {}
