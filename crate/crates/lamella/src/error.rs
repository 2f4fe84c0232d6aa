//! Crate-wide error type.
//!
//! Module-level operations return the variants directly relevant to them;
//! the CLI maps the classes onto exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("structural error in element {element}: {message}")]
    MalformedElement { element: usize, message: String },

    #[error("unknown patch '{0}'")]
    UnknownPatch(String),

    #[error("unknown geometry entity: {0}")]
    UnknownEntity(String),

    #[error("unknown built-in geometry '{0}'")]
    UnknownGeometry(String),

    #[error("parameter out of bounds: {0}")]
    ParamOutOfBounds(String),

    #[error("point outside reference domain: {0}")]
    OutsideReferenceDomain(String),

    #[error("unsupported element kind/order: {0}")]
    Unsupported(String),

    #[error("projection failed: {message} (best candidate distance {best_distance})")]
    ProjectionFailure { message: String, best_distance: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("boundary-layer topology error: {0}")]
    Topology(String),

    #[error("macro element {0} is invalid; refusing to split")]
    InvalidMacroElement(usize),

    #[error("split produced {count} invalid sub-elements (first offender: macro {macro_index})")]
    InvalidSubElements { count: usize, macro_index: usize },

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("division balancing infeasible: {0}")]
    Infeasible(String),

    #[error("periodic patches do not match: {0}")]
    PeriodicMismatch(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error at byte {offset} (line {line}, column {column}): {message}")]
    Parse {
        offset: usize,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("unsupported document version {found} (supported: {supported})")]
    UnsupportedVersion { found: i64, supported: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
