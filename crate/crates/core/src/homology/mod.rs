//! Predicates and transforms on face sets: rank, shadow, hypertrees, coboundaries,
//! hypercuts, Λ-connectivity and collapsing.

mod coboundary;
mod collapse;
mod cut;
mod graph;
mod hypercut;
mod lambda;
mod rank;

pub use coboundary::{coboundary_of, coboundary_of_graph, is_coboundary, regenerate_link, vertex_link};
pub use collapse::{collapse_all, exposed_faces, replay, CollapseSequence, CollapseStep};
pub use cut::{cut_size_formula, CutProfile};
pub use graph::{LinkGraph, MAX_LINK_VERTICES};
pub use hypercut::{hypercut_from_lambda_link, is_hypercut, is_hypercut_via_links, is_perfect_hypercut, perfect_hypercut_size};
pub use lambda::{lambda_classes_complex, lambda_classes_graph, lambda_connected_complex, lambda_connected_graph};
pub use rank::{face_rank, hypertree_size, is_acyclic, is_almost_hypertree, is_hypertree, shadow, span_of};

