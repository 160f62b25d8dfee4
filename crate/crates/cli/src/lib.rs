//! Spec-file ingestion, command dispatch and JSON reports for exact
//! computations with central crossed modules of Lie algebras.
//!
//! The `crossmod` binary reads a [`SpecDocument`], runs one [`Command`] and
//! prints a [`Report`]. Exit status is 0 when the answer is positive, 1
//! when it is a mathematical "no" (no adjustment, inequivalent data, a
//! failed check) and 2 on malformed input.

mod commands;
mod document;
mod emit;
mod report;

pub use commands::{run, Cli, Command, CommonFlags};
pub use document::{
    ActionSpec, AlgebraSpec, BracketEntry, ButterflySpec, CochainSpec, FormSpec, MapSpec, ModuleSpec, SpecDocument,
    VERSION,
};
pub use emit::{emit_catalog, CatalogRequest};
pub use report::{Report, Status};

/// Errors that make the input unusable. All of them map to exit status 2.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    /// The document is not valid JSON or does not match the format.
    #[error("parse error at line {line}, column {column} (field `{field}`): {message}")]
    Parse {
        /// 1-based line.
        line: usize,
        /// 1-based column.
        column: usize,
        /// Path of the offending field.
        field: String,
        /// What went wrong.
        message: String,
    },
    /// A field holds a value that cannot be used.
    #[error("invalid field `{field}`: {message}")]
    Field {
        /// Path of the offending field.
        field: String,
        /// What went wrong.
        message: String,
    },
    /// A name does not resolve.
    #[error("unresolved reference `{field}`: {message}")]
    Reference {
        /// The missing entry.
        field: String,
        /// What went wrong.
        message: String,
    },
    /// A referenced object fails its axioms.
    #[error("`{field}` is not valid: {message}")]
    Invalid {
        /// The offending entry.
        field: String,
        /// The failed axiom.
        message: String,
    },
    /// Bad command-line arguments.
    #[error("usage: {0}")]
    Usage(String),
    /// A computation rejected its input.
    #[error("{0}")]
    Computation(String),
    /// Reading or writing a file failed.
    #[error("io error on {path}: {message}")]
    Io {
        /// The path involved.
        path: String,
        /// The underlying error.
        message: String,
    },
}

impl CliError {
    /// The process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

pub(crate) fn computation(e: impl std::fmt::Display) -> CliError {
    CliError::Computation(e.to_string())
}
