//! Exact elimination over GF(2) and Q.

mod exact;
mod gf2;
mod span;

pub use exact::ExactMatrix;
pub use gf2::Gf2Matrix;
pub use span::{SparseVector, SpanState};

