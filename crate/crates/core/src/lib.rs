//! Signature-based feature extraction and episode prediction for weekly
//! mood self-report streams.
//!
//! The crate covers the full pipeline: CSV ingestion and cleaning of weekly
//! QIDS/ASRM series, episode labeling, rolling-window extraction with
//! missing-response handling, truncated path-signature features (with
//! lead-lag and missingness-indicator lifts), elastic-net logistic
//! regression trained from scratch, and a repeated stratified evaluation
//! protocol with corrected paired t-tests. A deterministic synthetic cohort
//! generator stands in for clinical data.
//!
//! Numeric kernels are generic over the scalar type; `f64` aliases are
//! provided at the crate root.

pub mod float;
pub mod signature;

pub use float::Scalar;

/// `f64` path, the concrete type the pipeline works with.
pub type Path64 = signature::Path<f64>;
/// `f64` truncated signature.
pub type Signature64 = signature::Signature<f64>;
