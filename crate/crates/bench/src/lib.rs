//! Shared inputs for the benchmarks.

use tight_sfs::SeifertInvariants;

/// A spread of inputs from the smallest case up to long continued fractions.
pub fn sample_inputs() -> Vec<(&'static str, SeifertInvariants)> {
    let mk = |pairs| SeifertInvariants::new(pairs).expect("valid fibers");
    vec![
        ("2_1x4", mk([(2, 1); 4])),
        ("mixed", mk([(2, 1), (2, 1), (2, 1), (5, 3)])),
        ("deep_e0", mk([(2, 7), (2, 1), (2, 1), (2, 1)])),
        ("long_chains", mk([(9, 8), (8, 7), (7, 6), (9, 7)])),
    ]
}
