//! Coefficient-functional bounds for normalized analytic functions whose
//! derivative combination f'(z) + α z f''(z) is subordinate to a convex
//! target φ on the unit disk, together with the machinery to verify every
//! bound against brute force.
//!
//! The crate is organized as a small pipeline:
//!
//! - [`series`]: truncated complex power-series arithmetic (multiplication,
//!   composition, reversion, log(f/z), circle extrema) — every other module
//!   is a client.
//! - [`phi`]: the catalog of admissible targets φ and the class parameter α.
//! - [`bounds`]: closed-form evaluators for the distortion/growth intervals
//!   and the Taylor, logarithmic, inverse, Fekete-Szego and second-Hankel
//!   coefficient bounds, including the piecewise sharp maximum H(q1, q2).
//! - [`witness`]: genuine class members built from Schur-parametrized
//!   Schwarz functions, plus extraction of every functional.
//! - [`oracle`]: deterministic brute-force campaigns that search for
//!   violations of the closed forms.
//!
//! All values are immutable once constructed and safe to share across
//! threads; campaigns parallelize internally with deterministic merging.

pub mod bounds;
pub mod oracle;
pub mod phi;
pub mod series;
pub mod witness;

pub use bounds::{
    distortion_bounds, eval_h, fekete_szego_inverse_bound, growth_bounds, hankel_second_bound,
    inverse_coeff_bounds, log_coeff_bounds, quad_max_unit, taylor_coeff_bound, BoundsError,
    HRegion, HResult, HankelMethod, Interval, Variant,
};
pub use oracle::{
    h_oracle, qe_grid_max, verify_class_bounds, Functional, OracleError, ParameterMode,
    SearchConfig, VerificationReport,
};
pub use phi::{ClassParams, PhiError, PhiSpec};
pub use series::{C64, SeriesError, TruncatedSeries};
pub use witness::{
    extremal, member_from_schwarz, membership_residual, profile, schur_to_schwarz, ExtremalKind,
    FunctionalProfile, SchwarzSample, WitnessError,
};
