//! Exact classification of tight contact structures with zero Giroux torsion
//! on Seifert fibered spaces `M(0; -q1/p1, -q2/p2, -q3/p3, -q4/p4)` with
//! `e0 <= -4`.
//!
//! The count is computed twice: once from Legendrian realizations of an
//! integral surgery diagram (a lower bound) and once from convex decomposition
//! of the manifold (an upper bound). [`classifier::classify`] certifies that the
//! two agree.

pub mod classifier;
pub mod convex;
pub mod error;
pub mod legendrian;
pub mod seifert;
pub mod slope;
pub mod snf;
pub mod surgery;

pub use classifier::{
    classify, classify_str, classify_with, upper_bound, verify_sweep, ClassificationReport,
    ClassifyOptions, SweepSummary,
};
pub use error::{Error, Result};
pub use seifert::{euler_number, fiber_data, Fiber, FiberData, SeifertInvariants};
pub use slope::{
    act, convergents, eval_cf, farey_neighbors, neg_cf, CfMode, Convergents, NegContinuedFraction,
    Rational, Slope, UnimodularMap,
};
