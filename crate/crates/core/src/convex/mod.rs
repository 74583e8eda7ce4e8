//! Convex surface combinatorics: the upper bound.
//!
//! Signs follow the convention in which the example case has relative Euler
//! classes `-2` and `2` for the two split shirt pictures; this is opposite to
//! Honda's original convention.

pub mod dividing;
pub mod honda;
pub mod pants;
pub mod shirt;

pub use dividing::{detect_bypass, DividingSetState, Region, Sign, Surface};
pub use honda::{
    edge_rounding_slope, maximize_twisting, solid_torus_count, toric_annulus_count, AnnulusCount,
};
pub use pants::{
    enumerate_pants_states, pants_case_analysis, pants_state, OvertwistedReason, PantsName,
    PantsState, Pattern, SignedFactorization,
};
pub use shirt::{
    filter_solid_torus_gluing, glue_pants_pair, gluing_census, picture, relative_euler_class,
    section_change_equivalent, shirt_count, FilterVerdict, GluingCensus, ShirtAudit, ShirtOutcome,
};
