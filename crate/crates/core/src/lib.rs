//! Simplicial combinatorics over F2 and Q: boundary operators, ranks, shadows,
//! hypertrees, hypercuts, collapsibility and Λ-connectivity, together with the
//! explicit extremal constructions and small exhaustive searches built on them.

pub mod boundary;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod search;
pub mod simplex;
pub mod verify;

pub use complex::{complement, complete_faces, link, FaceSet};
pub use error::{Error, Result};
pub use simplex::{Field, Simplex, VertexId};
