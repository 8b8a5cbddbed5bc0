//! Trace formulas for the Weil operators and the quadratic Gauss sums they
//! are compared against.

pub mod closed;
pub mod gauss;
pub mod lemma;

pub use closed::{
    closed_form_data, trace_closed_form, trace_closed_form_minpoly, trace_separable, ClosedFormData,
    ClosedTrace, ClosedTraceSummary,
};
pub use gauss::{quad_gauss_brute, quad_gauss_closed, QuadraticForm};
pub use lemma::{s_set, trace_invariant_lagrangian, trace_via_s_set};
