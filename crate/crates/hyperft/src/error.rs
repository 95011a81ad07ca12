//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong while building or evaluating a transform.
#[derive(Debug, Error)]
pub enum Error {
    #[error("precision too coarse: {0} decimal digits (minimum is 8)")]
    PrecisionTooCoarse(u32),

    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    #[error("range error in {op}: result is not finite")]
    Range { op: &'static str },

    #[error("cannot parse {kind} from {text:?}")]
    Parse { kind: &'static str, text: String },

    #[error("invalid quadrature spec: {0}")]
    InvalidSpec(String),

    #[error("node limit {max} per side exceeded before the truncation threshold")]
    MaxNodesExceeded { max: usize },

    #[error("integrand is not finite at abscissa {abscissa}")]
    Evaluation { abscissa: String },

    #[error("expansion center {center} is too close to the real axis")]
    IllConditionedCenter { center: String },

    #[error("Taylor coefficient {index} is numerically zero; the quotient-difference scheme needs a different center")]
    ZeroCoefficient { index: usize },

    #[error("quotient-difference breakdown: vanishing denominator at column {column}, row {row}")]
    Breakdown { column: usize, row: usize },

    #[error("continued-fraction denominator vanished at depth {depth}")]
    NearPole { depth: usize },

    #[error("coefficients stayed degenerate after {retries} center adjustments")]
    PersistentZeroCoefficients { retries: usize },

    #[error("{branch} branch: {source}")]
    Branch {
        branch: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("malformed transform file: {0}")]
    MalformedFile(String),
}

impl Error {
    /// Wraps an error with the half-plane branch it occurred in.
    pub fn in_branch(self, branch: &'static str) -> Error {
        Error::Branch {
            branch,
            source: Box::new(self),
        }
    }
}
