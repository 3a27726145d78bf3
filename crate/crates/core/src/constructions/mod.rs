//! Explicit complexes and link graphs.

mod arith;
mod family;
mod random_link;
mod shadowless;
mod star;

pub use arith::{
    arith_classes, arithmetic_complex, arithmetic_complex_relabeled, artin_condition, block_form_check, certificate_check,
    group_index, ArithClasses, CertificateVector, DirectedEdge,
};
pub use family::{extremal_link_family, family_candidates, FamilyCandidate, FamilyStructure};
pub use random_link::{face_draw, link_probability, random_even_dim_link};
pub use shadowless::{collapsible_shadowless_complex, delta_sigma, polygon_gadget, rho, top_down_residual, PolygonGadget};
pub use star::star_hypertree;
