//! Exact computations with the quantized periplectic superalgebra `U_q(p_n)`
//! acting on the natural module `V = C_q(n|n)` and its tensor powers.
//!
//! Scalars live in `Q(q)` ([`qrat::RatFunc`]); operators are sparse graded
//! matrices ([`superlinalg::SuperMatrix`]). Everything is exact: a relation
//! "holds" when its residual matrix is identically zero.

pub mod cli;
pub mod error;
pub mod modtools;
pub mod natrep;
pub mod qbrauer;
pub mod qrat;
pub mod relcheck;
pub mod superlinalg;
pub mod tensorrep;

pub use error::{Error, Result};
