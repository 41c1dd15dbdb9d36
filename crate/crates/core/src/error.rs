use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot substitute q = 0 into a Laurent polynomial with negative exponent {min_exp}")]
    SubstituteAtPole { min_exp: i64 },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension {dim} exceeds the configured bound {bound}")]
    DimensionTooLarge { dim: usize, bound: usize },

    #[error("series division undefined: {0}")]
    DivisionUndefined(&'static str),

    #[error("division by zero")]
    DivisionByZero,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("result is not a polynomial (lowest exponent {min_exp})")]
    NotPolynomial { min_exp: i64 },

    #[error("row too short: {row_len} entries cannot produce {n_rows} rows")]
    RowTooShort { n_rows: usize, row_len: usize },

    #[error("size too large for exhaustive enumeration: {0}")]
    SizeTooLarge(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid rook configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("q-sample must be nonzero")]
    ZeroQ,

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
