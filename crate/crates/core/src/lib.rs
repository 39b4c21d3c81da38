//! Exact computations with the genus-2 Jones representation of the mapping
//! class group: the representation over `Z[t, t^-1]`, its expansion at
//! `t = -e^h`, the induced filtration of the Torelli group, the `sp(4)`
//! weight theory of the graded pieces, and the cyclic quotient orders of the
//! degree-1 and degree-2 truncations.

pub mod arith;
pub mod error;
pub mod expansion;
pub mod jones;
pub mod quotients;
pub mod sp4;
pub mod words;

pub use error::{Error, Result};
