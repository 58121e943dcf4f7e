use std::fmt;

use homsuper::CheckReport;
use thiserror::Error;

/// 1-based line and column in an input file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{pos}: syntax error: {message}")]
    Syntax { pos: Pos, message: String },

    #[error("{pos}: undeclared name `{name}`")]
    Undeclared { name: String, pos: Pos },

    #[error("{pos}: duplicate {what}")]
    Duplicate { what: String, pos: Pos },

    #[error("{pos}: a file may declare at most one parameter")]
    TwoParameters { pos: Pos },

    #[error("{pos}: `mul` and `bracket` lines cannot be mixed (first table line at line {first})")]
    MixedVocabulary { pos: Pos, first: usize },

    #[error("table is not even: {} entr(ies) land in the wrong parity", .0.total_violations)]
    Evenness(Box<CheckReport>),

    #[error("{0}")]
    Core(#[from] homsuper::Error),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub(crate) fn syntax(pos: Pos, message: impl Into<String>) -> Self {
        CliError::Syntax {
            pos,
            message: message.into(),
        }
    }
}
