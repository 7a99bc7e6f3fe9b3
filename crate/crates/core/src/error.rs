use thiserror::Error;

use crate::rings::RingTag;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring {0} is not a Euclidean domain")]
    RingNotEuclidean(RingTag),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("truncation horizon {horizon} must exceed the minimal exponent {min_exponent}")]
    HorizonTooLow {
        horizon: String,
        min_exponent: String,
    },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("map does not commute with the differentials: {0}")]
    Commutation(String),

    #[error("missing variable tag `{0}`")]
    MissingTag(String),

    #[error("invalid knot spec: {0}")]
    Spec(String),

    #[error("surgery formula out of range: {0}")]
    FormulaOutOfRange(String),

    #[error("truncated complex has not stabilized at N = {tried}; retry with N >= {suggested}")]
    Truncation { tried: usize, suggested: usize },

    #[error("degenerate intersection form: {0}")]
    DegenerateForm(String),

    #[error("ambiguous exact triangle: {0}")]
    AmbiguousTriangle(String),

    #[error("inconsistent input: {0}")]
    InconsistentInput(String),

    #[error("twisting class must be nonzero")]
    ZeroTwist,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("family out of scope: {0}")]
    FamilyOutOfScope(String),

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// Short kebab-case name of the variant, for structured reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::RingNotEuclidean(_) => "ring-not-euclidean",
            Error::Shape(_) => "shape",
            Error::DivisionByZero => "division-by-zero",
            Error::HorizonTooLow { .. } => "horizon-too-low",
            Error::InvalidComplex(_) => "invalid-complex",
            Error::Commutation(_) => "commutation",
            Error::MissingTag(_) => "missing-tag",
            Error::Spec(_) => "spec",
            Error::FormulaOutOfRange(_) => "formula-out-of-range",
            Error::Truncation { .. } => "truncation",
            Error::DegenerateForm(_) => "degenerate-form",
            Error::AmbiguousTriangle(_) => "ambiguous-triangle",
            Error::InconsistentInput(_) => "inconsistent-input",
            Error::ZeroTwist => "zero-twist",
            Error::Unsupported(_) => "unsupported",
            Error::FamilyOutOfScope(_) => "family-out-of-scope",
            Error::HypothesisNotMet(_) => "hypothesis-not-met",
            Error::Parse { .. } => "parse",
        }
    }

    pub(crate) fn parse_at(text: &str, offset: usize, message: impl Into<String>) -> Self {
        let (line, column) = line_column(text, offset);
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

/// 1-based line and column of a byte offset.
pub fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(text.len());
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, column)
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        Error::Parse {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

impl Error {
    /// Converts a TOML error, locating it in the source `text`.
    pub fn from_toml(text: &str, e: toml::de::Error) -> Self {
        let (line, column) = e
            .span()
            .map_or((0, 0), |span| line_column(text, span.start));
        Error::Parse {
            line,
            column,
            message: e.message().to_string(),
        }
    }
}
