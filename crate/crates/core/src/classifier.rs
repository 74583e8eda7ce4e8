//! The full pipeline: normalize, count from below and from above, certify
//! that the counts agree, and report.

use std::thread;

use serde::{Deserialize, Serialize};

use crate::convex::{
    enumerate_pants_states, gluing_census, picture, shirt::torsion_state, shirt_count,
    solid_torus_count, GluingCensus, ShirtAudit,
};
use crate::error::{Error, Result};
use crate::legendrian::{closed_form_count, Realizations};
use crate::seifert::{
    euler_number, fiber_data, normalized_boundary_slope, parse_coefficients, SeifertInvariants,
};
use crate::surgery::{h1_order_closed_form, pipeline};

pub const STEIN_FILLABLE: &str =
    "Every structure counted is Stein fillable: it is obtained by Legendrian (-1) surgery on a \
     Legendrian realization of the integral surgery diagram.";
pub const TORSION_FAMILY: &str =
    "For each positive integer n there is a tight structure with Giroux torsion n, and these are \
     pairwise non-isotopic, so M carries infinitely many tight structures with nonzero torsion.";
pub const TORSION_NOT_WEAKLY_FILLABLE: &str =
    "Tight structures with positive Giroux torsion are not weakly fillable.";

/// Continued fraction data of one fiber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    pub p: i64,
    pub q: i64,
    /// `[a0, a1, ..., am]` of `-q/p`.
    pub cf: Vec<i64>,
    pub u: i64,
    pub v: i64,
    pub normalized_boundary_slope: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperBoundBreakdown {
    pub shirt: u128,
    pub solid_torus_counts: [u128; 4],
}

impl UpperBoundBreakdown {
    pub fn total(&self) -> u128 {
        self.shirt * self.solid_torus_counts.iter().product::<u128>()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificates {
    pub bounds_equal: bool,
    pub distinct_chern: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Statements {
    pub stein_fillable: String,
    pub torsion_family: String,
    pub torsion_not_weakly_fillable: String,
}

impl Default for Statements {
    fn default() -> Statements {
        Statements {
            stein_fillable: STEIN_FILLABLE.to_string(),
            torsion_family: TORSION_FAMILY.to_string(),
            torsion_not_weakly_fillable: TORSION_NOT_WEAKLY_FILLABLE.to_string(),
        }
    }
}

/// Serialized convex states behind the upper bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Explanation {
    pub pants_states: Vec<(String, String)>,
    pub shirt_pictures: Vec<(u8, String)>,
    pub torsion_witness: String,
    pub census: GluingCensus,
    pub shirt_audit: ShirtAudit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub input: SeifertInvariants,
    pub e0: i64,
    pub fibers: Vec<FiberReport>,
    pub count_zero_torsion: u128,
    /// Rotation numbers, central component first, then each chain root to leaf.
    /// Empty unless enumeration was requested.
    pub realization_vectors: Vec<Vec<i64>>,
    pub upper_bound_breakdown: UpperBoundBreakdown,
    pub certificates: Certificates,
    pub statements: Statements,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explanation: Option<Explanation>,
}

fn check_regime(inv: &SeifertInvariants) -> Result<i64> {
    match euler_number(inv) {
        e0 if e0 > -4 => Err(Error::UnsupportedRegime { e0 }),
        e0 => Ok(e0),
    }
}

/// `s = sum floor(q_i / p_i)`, the slope left on the shirt boundary once the
/// other three boundaries are normalized to 0.
pub fn shirt_slope(inv: &SeifertInvariants) -> i64 {
    inv.fibers.iter().map(|f| f.q.div_euclid(f.p)).sum()
}

/// Convex-decomposition count with its factors.
pub fn upper_bound(inv: &SeifertInvariants) -> Result<(u128, UpperBoundBreakdown)> {
    check_regime(inv)?;
    let shirt = u128::from(shirt_count(shirt_slope(inv)).classes);
    let mut solid_torus_counts = [0; 4];
    for (slot, f) in solid_torus_counts.iter_mut().zip(&inv.fibers) {
        *slot = solid_torus_count(normalized_boundary_slope(&fiber_data(f.p, f.q)?))?;
    }
    let b = UpperBoundBreakdown {
        shirt,
        solid_torus_counts,
    };
    Ok((b.total(), b))
}

pub fn explain(inv: &SeifertInvariants) -> Explanation {
    let states = enumerate_pants_states();
    Explanation {
        pants_states: states
            .iter()
            .map(|s| (s.name.to_string(), s.dividing_set.to_string()))
            .collect(),
        shirt_pictures: (1..=8).map(|n| (n, picture(n).state.to_string())).collect(),
        torsion_witness: torsion_state().to_string(),
        census: gluing_census(&states),
        shirt_audit: shirt_count(shirt_slope(inv)),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// List every realization vector rather than only counting them.
    pub enumerate: bool,
    pub explain: bool,
}

/// Classify with realization vectors listed.
pub fn classify(inv: &SeifertInvariants) -> Result<ClassificationReport> {
    classify_with(
        inv,
        ClassifyOptions {
            enumerate: true,
            explain: false,
        },
    )
}

/// Classify; fails with `BoundsMismatch` if the two routes disagree.
pub fn classify_with(
    inv: &SeifertInvariants,
    opts: ClassifyOptions,
) -> Result<ClassificationReport> {
    let e0 = check_regime(inv)?;
    let mut fibers = Vec::with_capacity(4);
    for f in &inv.fibers {
        let fd = fiber_data(f.p, f.q)?;
        fibers.push(FiberReport {
            p: f.p,
            q: f.q,
            cf: fd.cf.coeffs().to_vec(),
            u: fd.u,
            v: fd.v,
            normalized_boundary_slope: normalized_boundary_slope(&fd).to_string(),
        });
    }
    let real = Realizations::new(pipeline(inv)?.last())?;
    let (lower, realization_vectors, distinct_chern) = if opts.enumerate {
        let mut rots: Vec<Vec<i64>> = real.map(|v| v.rots).collect();
        let listed = rots.clone();
        rots.sort();
        let distinct = rots.windows(2).all(|w| w[0] != w[1]);
        (listed.len() as u128, listed, distinct)
    } else {
        // Each factor list is strictly ascending, so the product is injective.
        (real.count_by_walking(), Vec::new(), true)
    };
    let (upper, upper_bound_breakdown) = upper_bound(inv)?;
    let closed = closed_form_count(inv)?;
    if lower != upper || upper != closed {
        return Err(Error::BoundsMismatch {
            lower,
            upper,
            closed,
        });
    }
    Ok(ClassificationReport {
        input: *inv,
        e0,
        fibers,
        count_zero_torsion: lower,
        realization_vectors,
        upper_bound_breakdown,
        certificates: Certificates {
            bounds_equal: true,
            distinct_chern,
        },
        statements: Statements::default(),
        explanation: opts.explain.then(|| explain(inv)),
    })
}

/// Parse the fiber grammar, normalize and classify.
pub fn classify_str(fibers: &str, opts: ClassifyOptions) -> Result<ClassificationReport> {
    let inv = SeifertInvariants::from_coefficients(&parse_coefficients(fibers)?)?;
    classify_with(&inv, opts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepFailure {
    pub input: SeifertInvariants,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub max_p: i64,
    pub cases: u64,
    pub passed: u64,
    /// Realization vectors walked across all cases.
    pub vectors: u128,
    pub h1_checked: bool,
    pub failures: Vec<SweepFailure>,
}

/// Fibers `(p, q)` with `2 <= p <= max_p`, `1 <= q <= 2p`, `gcd(p, q) = 1`.
pub fn sweep_fibers(max_p: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for p in 2..=max_p {
        for q in 1..=2 * p {
            if num_integer::gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

/// Every sorted 4-multiset of [`sweep_fibers`]; all have `e0 <= -4`.
pub fn sweep_cases(max_p: i64) -> Vec<[(i64, i64); 4]> {
    let f = sweep_fibers(max_p);
    let n = f.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                for l in k..n {
                    out.push([f[i], f[j], f[k], f[l]]);
                }
            }
        }
    }
    out
}

/// Lower bound, upper bound, closed form and (optionally) the homology along
/// every surgery move. Returns the count on success.
pub fn check_case(inv: &SeifertInvariants, check_h1: bool) -> std::result::Result<u128, String> {
    let pl = pipeline(inv).map_err(|e| e.to_string())?;
    if check_h1 {
        let expected = h1_order_closed_form(inv);
        let trace = pl.h1_trace();
        if trace.iter().any(|&h| h != expected) {
            return Err(format!("h1 trace {trace:?}, expected {expected}"));
        }
    }
    let lower = Realizations::new(pl.last())
        .map_err(|e| e.to_string())?
        .count_by_walking();
    let (upper, _) = upper_bound(inv).map_err(|e| e.to_string())?;
    let closed = closed_form_count(inv).map_err(|e| e.to_string())?;
    if lower != upper || upper != closed {
        return Err(Error::BoundsMismatch {
            lower,
            upper,
            closed,
        }
        .to_string());
    }
    Ok(lower)
}

/// Check every sweep case, split across the available cores. The summary
/// does not depend on the number of workers.
pub fn verify_sweep_with(max_p: i64, check_h1: bool) -> SweepSummary {
    let cases = sweep_cases(max_p);
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(cases.len().max(1));
    let results: Vec<(u128, Vec<(usize, SweepFailure)>)> = thread::scope(|sc| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let cases = &cases;
                sc.spawn(move || {
                    let mut vectors = 0u128;
                    let mut failures = Vec::new();
                    for idx in (w..cases.len()).step_by(workers) {
                        let input =
                            SeifertInvariants::new(cases[idx]).expect("sweep fibers are valid");
                        match check_case(&input, check_h1) {
                            Ok(n) => vectors += n,
                            Err(reason) => failures.push((idx, SweepFailure { input, reason })),
                        }
                    }
                    (vectors, failures)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut failures: Vec<(usize, SweepFailure)> = results
        .iter()
        .flat_map(|(_, f)| f.iter().cloned())
        .collect();
    failures.sort_by_key(|(i, _)| *i);
    let total = cases.len() as u64;
    SweepSummary {
        max_p,
        cases: total,
        passed: total - failures.len() as u64,
        vectors: results.iter().map(|(v, _)| v).sum(),
        h1_checked: check_h1,
        failures: failures.into_iter().map(|(_, f)| f).collect(),
    }
}

/// [`verify_sweep_with`] including the homology checks.
pub fn verify_sweep(max_p: i64) -> SweepSummary {
    verify_sweep_with(max_p, true)
}
