//! Exact arithmetic kernels: Laurent polynomials, rational functions,
//! truncated series and integer matrices.

mod matrix;
mod poly;
mod ratfunc;
mod series;

pub use matrix::{IntMatrix, DEFAULT_PERMANENT_BOUND};
pub use poly::{QPoly, Substituted, Substitution};
pub use ratfunc::QRational;
pub use series::{series_compose_div, Coefficient, TruncatedSeries};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Add, subtract or multiply two Laurent polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &QPoly, b: &QPoly, op: PolyOp) -> QPoly {
    match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
    }
}
