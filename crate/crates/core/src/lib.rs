//! Exact q-analogues of poly-Bernoulli numbers, together with brute-force
//! enumerations of the weighted objects each one counts.

pub mod error;
pub mod exactnum;
pub mod families;
pub mod objects;
pub mod qkernels;
pub mod rook;
pub mod verify;

pub use error::{Error, Result};
