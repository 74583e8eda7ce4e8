//! Tight structures on {pair of pants} × S¹ with boundary slopes `(0, 0, -1)`.
//!
//! After maximizing twisting, either no bypass exists (a single structure),
//! or the pants splits as a smaller pants `Σ'` with three basic slices
//! `L1, L2, L3` attached. On `Σ'` the dividing arcs either join every pair of
//! boundaries (the tripod) or run twice between the first two boundaries
//! with a boundary-parallel arc on the third (the split). The sign of `L3`
//! is fixed by the sign configuration of `Σ'`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::dividing::{DividingSetState, Region, Sign, Surface};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PantsName {
    A,
    B,
    BPrime,
    C,
    CPrime,
    D,
    DPrime,
    E,
    EPrime,
}

impl PantsName {
    pub const ALL: [PantsName; 9] = [
        PantsName::A,
        PantsName::B,
        PantsName::BPrime,
        PantsName::C,
        PantsName::CPrime,
        PantsName::D,
        PantsName::DPrime,
        PantsName::E,
        PantsName::EPrime,
    ];

    pub fn mirror(self) -> PantsName {
        use PantsName::*;
        match self {
            A => A,
            B => BPrime,
            BPrime => B,
            C => CPrime,
            CPrime => C,
            D => DPrime,
            DPrime => D,
            E => EPrime,
            EPrime => E,
        }
    }
}

impl fmt::Display for PantsName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PantsName::*;
        f.write_str(match self {
            A => "xi_A",
            B => "xi_B",
            BPrime => "xi_B'",
            C => "xi_C",
            CPrime => "xi_C'",
            D => "xi_D",
            DPrime => "xi_D'",
            E => "xi_E",
            EPrime => "xi_E'",
        })
    }
}

/// Dividing pattern on `Σ'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pattern {
    /// No bypass: no factorization, tripod on the whole pants.
    NoBypass,
    /// Every arc joins two different boundaries.
    Tripod,
    /// Two arcs between boundaries 1 and 2, one parallel to boundary 3.
    Split,
}

/// Signs of `(L1, L2, L3)`; `L3` carries the sign of `Σ'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedFactorization(pub [Sign; 3]);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PantsState {
    pub name: PantsName,
    pub pattern: Pattern,
    /// `None` for the structure without a bypass.
    pub factorization: Option<SignedFactorization>,
    pub boundary_slopes: [i64; 3],
    pub dividing_set: DividingSetState,
}

impl PantsState {
    /// Sign of `Σ'`, equal to the sign of `L3`.
    pub fn sigma(&self) -> Option<Sign> {
        self.factorization.map(|f| f.0[2])
    }

    /// `(L1, L2)`.
    pub fn layers(&self) -> Option<(Sign, Sign)> {
        self.factorization.map(|f| (f.0[0], f.0[1]))
    }

    /// Tripod with `L1 != L2`.
    pub fn is_mixed(&self) -> bool {
        self.pattern == Pattern::Tripod && self.layers().is_some_and(|(a, b)| a != b)
    }

    /// Boundary index (0 or 1) of the negative layer of a mixed tripod.
    pub fn negative_layer(&self) -> Option<usize> {
        let (l1, l2) = self.layers()?;
        match (self.is_mixed(), l1, l2) {
            (true, Sign::Minus, _) => Some(0),
            (true, _, Sign::Minus) => Some(1),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OvertwistedReason {
    /// All three basic slices share a sign.
    AllSameSign,
    /// A closed dividing curve bounds a disc.
    ContractibleCurve,
    /// Mixed layers leave a bypass that overtwists a solid torus.
    TooMuchRadialTwisting,
    /// An overtwisted disc is visible after gluing.
    VisibleDisc,
    /// A boundary-parallel arc bounds a meridian disc of a glued solid torus.
    BoundaryParallelArc,
}

/// One branch of the case analysis with its verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PantsCandidate {
    pub pattern: Pattern,
    pub factorization: Option<SignedFactorization>,
    pub verdict: Result<PantsName, OvertwistedReason>,
}

fn region(segments: &[(usize, usize)], curve_sides: usize, sign: Sign) -> Region {
    Region {
        segments: segments.to_vec(),
        curve_sides,
        sign,
    }
}

fn tripod(sign: Sign, marks: Vec<(usize, Sign)>) -> DividingSetState {
    DividingSetState {
        surface: Surface::Pants,
        arcs: vec![((0, 1), (1, 0)), ((1, 1), (2, 0)), ((2, 1), (0, 0))],
        closed_curves: vec![],
        regions: vec![
            region(&[(0, 0), (1, 0), (2, 0)], 0, sign),
            region(&[(0, 1), (1, 1), (2, 1)], 0, -sign),
        ],
        bypasses: marks,
        twist: 0,
        boundary_slopes: vec![0, 0, -1],
    }
}

fn split(sign: Sign, marks: Vec<(usize, Sign)>) -> DividingSetState {
    DividingSetState {
        surface: Surface::Pants,
        arcs: vec![((0, 0), (1, 1)), ((0, 1), (1, 0)), ((2, 0), (2, 1))],
        closed_curves: vec![],
        regions: vec![
            region(&[(2, 0)], 0, sign),
            region(&[(0, 0), (1, 0)], 0, sign),
            region(&[(0, 1), (1, 1), (2, 1)], 0, -sign),
        ],
        bypasses: marks,
        twist: 0,
        boundary_slopes: vec![0, 0, -1],
    }
}

fn name_2a(sigma: Sign, l1: Sign, l2: Sign) -> PantsName {
    use PantsName::*;
    // Named for sigma = +; the mirror gives the primed name.
    let base = match (l1 == sigma, l2 == sigma) {
        (false, false) => B,
        (false, true) => C,
        (true, false) => D,
        (true, true) => unreachable!("all same sign is overtwisted"),
    };
    if sigma == Sign::Plus {
        base
    } else {
        base.mirror()
    }
}

/// Walk the case split and record every branch with its verdict.
pub fn pants_case_analysis() -> Vec<PantsCandidate> {
    let signs = [Sign::Plus, Sign::Minus];
    let mut out = vec![PantsCandidate {
        pattern: Pattern::NoBypass,
        factorization: None,
        verdict: Ok(PantsName::A),
    }];
    for pattern in [Pattern::Tripod, Pattern::Split] {
        for sigma in signs {
            for l1 in signs {
                for l2 in signs {
                    let verdict = match pattern {
                        _ if l1 == sigma && l2 == sigma => Err(match pattern {
                            Pattern::Tripod => OvertwistedReason::AllSameSign,
                            _ => OvertwistedReason::ContractibleCurve,
                        }),
                        Pattern::Tripod => Ok(name_2a(sigma, l1, l2)),
                        _ if l1 != l2 => Err(OvertwistedReason::TooMuchRadialTwisting),
                        _ if sigma == Sign::Plus => Ok(PantsName::E),
                        _ => Ok(PantsName::EPrime),
                    };
                    let factorization = Some(SignedFactorization([l1, l2, sigma]));
                    out.push(PantsCandidate {
                        pattern,
                        factorization,
                        verdict,
                    });
                }
            }
        }
    }
    out
}

/// Build the state named by a surviving branch.
fn build(
    pattern: Pattern,
    factorization: Option<SignedFactorization>,
    name: PantsName,
) -> PantsState {
    let dividing_set = match (pattern, factorization) {
        (Pattern::NoBypass, _) => tripod(Sign::Plus, vec![]),
        (_, Some(SignedFactorization([l1, l2, s]))) => {
            let marks = vec![(0, l1), (1, l2), (2, s)];
            if pattern == Pattern::Tripod {
                tripod(s, marks)
            } else {
                split(s, marks)
            }
        }
        _ => unreachable!("factorized patterns carry signs"),
    };
    PantsState {
        name,
        pattern,
        factorization,
        boundary_slopes: [0, 0, -1],
        dividing_set,
    }
}

/// The nine tight structures, in the order of the case analysis.
pub fn enumerate_pants_states() -> Vec<PantsState> {
    pants_case_analysis()
        .into_iter()
        .filter_map(|c| c.verdict.ok().map(|n| build(c.pattern, c.factorization, n)))
        .collect()
}

pub fn pants_state(name: PantsName) -> PantsState {
    enumerate_pants_states()
        .into_iter()
        .find(|s| s.name == name)
        .expect("every name is enumerated")
}
