//! Exhaustive and family-constrained hypercut searches, and the appendix verifier.

mod appendix;
mod exhaustive;
mod family;
mod report;

pub use appendix::{
    appendix_feasible, appendix_g, claimed_optima, minimize_g, minimize_g_pointwise, sample_h_nonnegative, GridReport, OptPoint, Rational,
    SampleReport,
};
pub use exhaustive::{
    max_hypercut_exhaustive, min_shadow_almost_hypertree, min_shadow_by_enumeration, SweepConfig, DEFAULT_MAX_N,
    OPT_IN_MAX_N,
};
pub use family::{family_max, optimal_f, theorem_main_value};
pub use report::{SearchReport, REPORT_FORMAT};
