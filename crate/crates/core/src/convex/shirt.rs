//! Gluing two pants along a toric annulus into {shirt} × S¹, filtering
//! overtwisted results and counting what survives.
//!
//! The shirt boundaries are numbered so that the first pants contributes
//! boundaries 0 and 1 and the second contributes 2 and 3.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::dividing::{detect_bypass, DividingSetState, Region, Sign, Surface};
use super::pants::{OvertwistedReason, PantsName, PantsState, Pattern};
use crate::error::{Error, Result};

/// A zero-torsion shirt configuration, numbered 1 to 8.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShirtPicture {
    pub number: u8,
    pub state: DividingSetState,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShirtOutcome {
    Shirt(ShirtPicture),
    /// Nonzero Giroux torsion: not counted, only flagged.
    Torsion(DividingSetState),
    Overtwisted(OvertwistedReason),
}

fn region(segments: &[(usize, usize)], curve_sides: usize, sign: Sign) -> Region {
    Region {
        segments: segments.to_vec(),
        curve_sides,
        sign,
    }
}

fn shirt(arcs: Vec<((usize, usize), (usize, usize))>, regions: Vec<Region>) -> DividingSetState {
    DividingSetState {
        surface: Surface::Shirt,
        arcs,
        closed_curves: vec![],
        regions,
        bypasses: vec![],
        twist: 0,
        boundary_slopes: vec![0; 4],
    }
}

/// Every boundary joined to the next one, cyclically. Carries a bypass pair on
/// the seam and a half-twist count.
fn four_cycle(marks: [Sign; 2], twist: i32) -> DividingSetState {
    let mut s = shirt(
        vec![
            ((0, 1), (1, 0)),
            ((1, 1), (2, 0)),
            ((2, 1), (3, 0)),
            ((3, 1), (0, 0)),
        ],
        vec![
            region(&[(0, 0), (1, 0), (2, 0), (3, 0)], 0, Sign::Plus),
            region(&[(0, 1), (1, 1), (2, 1), (3, 1)], 0, Sign::Minus),
        ],
    );
    s.bypasses = vec![(0, marks[0]), (0, marks[1])];
    s.twist = twist;
    s
}

const SPLIT_ARCS: [((usize, usize), (usize, usize)); 4] = [
    ((0, 0), (1, 1)),
    ((0, 1), (1, 0)),
    ((2, 0), (3, 1)),
    ((2, 1), (3, 0)),
];

/// Boundaries 0, 1 and 2, 3 each joined by two arcs; the two discs share a
/// sign opposite to the middle annulus.
fn split(disc_sign: Sign) -> DividingSetState {
    shirt(
        SPLIT_ARCS.to_vec(),
        vec![
            region(&[(0, 0), (1, 0)], 0, disc_sign),
            region(&[(2, 0), (3, 0)], 0, disc_sign),
            region(&[(0, 1), (1, 1), (2, 1), (3, 1)], 0, -disc_sign),
        ],
    )
}

/// Split pattern with two parallel closed curves in the middle annulus.
pub fn torsion_state() -> DividingSetState {
    let mut s = shirt(
        SPLIT_ARCS.to_vec(),
        vec![
            region(&[(0, 0), (1, 0)], 0, Sign::Minus),
            region(&[(2, 0), (3, 0)], 0, Sign::Minus),
            region(&[(0, 1), (1, 1)], 1, Sign::Plus),
            region(&[], 2, Sign::Minus),
            region(&[(2, 1), (3, 1)], 1, Sign::Plus),
        ],
    );
    s.closed_curves = vec![(2, 3), (3, 4)];
    s
}

/// Boundary-parallel arc on `b` cutting off a negative half-disc, tripod on
/// the other three boundaries.
fn parallel(b: usize) -> DividingSetState {
    let others: Vec<usize> = (1..4).map(|k| (b + k) % 4).collect();
    let (j, k, l) = (others[0], others[1], others[2]);
    shirt(
        vec![
            ((b, 0), (b, 1)),
            ((j, 1), (k, 0)),
            ((k, 1), (l, 0)),
            ((l, 1), (j, 0)),
        ],
        vec![
            region(&[(b, 0)], 0, Sign::Minus),
            region(&[(b, 1), (j, 0), (k, 0), (l, 0)], 0, Sign::Plus),
            region(&[(j, 1), (k, 1), (l, 1)], 0, Sign::Minus),
        ],
    )
}

/// Pictures 1 to 8.
pub fn picture(number: u8) -> ShirtPicture {
    let state = match number {
        1 => four_cycle([Sign::Plus, Sign::Minus], 0),
        2 => four_cycle([Sign::Plus, Sign::Plus], 1),
        3 => split(Sign::Minus),
        4 => split(Sign::Plus),
        5..=8 => parallel(usize::from(number - 5)),
        _ => panic!("no picture {number}"),
    };
    ShirtPicture { number, state }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    NoBypass,
    Unmixed,
    Mixed,
    Split,
}

fn kind(s: &PantsState) -> Kind {
    match s.pattern {
        Pattern::NoBypass => Kind::NoBypass,
        Pattern::Split => Kind::Split,
        Pattern::Tripod if s.is_mixed() => Kind::Mixed,
        Pattern::Tripod => Kind::Unmixed,
    }
}

/// Glue two pants across the toric annulus with boundary slopes -1 and +1.
pub fn glue_pants_pair(a: &PantsState, b: &PantsState) -> ShirtOutcome {
    use Kind::*;
    let ot = ShirtOutcome::Overtwisted;
    let pic = |n| ShirtOutcome::Shirt(picture(n));
    match (kind(a), kind(b)) {
        (Split, Split) if a.sigma() != b.sigma() => ShirtOutcome::Torsion(torsion_state()),
        (Split, Split) => ot(OvertwistedReason::ContractibleCurve),
        (Split, Unmixed) | (Unmixed, Split) if a.sigma() == b.sigma() => {
            pic(if a.sigma() == Some(Sign::Plus) { 3 } else { 4 })
        }
        (Split, _) | (_, Split) => ot(OvertwistedReason::VisibleDisc),
        (Mixed, Mixed) => ot(OvertwistedReason::VisibleDisc),
        (Mixed, _) => pic(5 + a.negative_layer().expect("mixed") as u8),
        (_, Mixed) => pic(7 + b.negative_layer().expect("mixed") as u8),
        (NoBypass, NoBypass) => ot(OvertwistedReason::VisibleDisc),
        (Unmixed, Unmixed) if a.name == b.name => pic(2),
        _ => pic(1),
    }
}

/// Every ordered pair of pants states with its outcome.
pub fn gluing_sweep(states: &[PantsState]) -> Vec<(PantsName, PantsName, ShirtOutcome)> {
    let mut out = Vec::with_capacity(states.len() * states.len());
    for a in states {
        for b in states {
            out.push((a.name, b.name, glue_pants_pair(a, b)));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterVerdict {
    TightCandidate,
    Overtwisted,
}

/// Gluing in the exceptional solid tori: a boundary-parallel arc on the shirt
/// makes a meridian disc of one of them overtwisted.
pub fn filter_solid_torus_gluing(state: &DividingSetState) -> FilterVerdict {
    if (0..state.boundary_count()).any(|b| detect_bypass(state, b)) {
        FilterVerdict::Overtwisted
    } else {
        FilterVerdict::TightCandidate
    }
}

pub fn relative_euler_class(state: &DividingSetState) -> i64 {
    state.relative_euler_class()
}

/// Rewrite `{same-sign bypass pair, half twist}` into a mixed pair until no
/// twist remains or no same-sign pair is left.
pub fn section_normal_form(state: &DividingSetState) -> DividingSetState {
    let mut s = state.canonical();
    while s.twist != 0 {
        let pair = (0..s.bypasses.len()).find_map(|i| {
            (i + 1..s.bypasses.len())
                .find(|&j| s.bypasses[i] == s.bypasses[j])
                .map(|j| (i, j))
        });
        let Some((_, j)) = pair else { break };
        s.bypasses[j].1 = -s.bypasses[j].1;
        s.twist -= s.twist.signum();
    }
    s.bypasses.sort_unstable();
    s.boundary_slopes.clear();
    s
}

/// Two shirt states describe the same structure up to a change of section.
pub fn section_change_equivalent(a: &DividingSetState, b: &DividingSetState) -> Result<bool> {
    let (sa, sb): (i64, i64) = (
        a.boundary_slopes.iter().sum(),
        b.boundary_slopes.iter().sum(),
    );
    if sa != sb {
        return Err(Error::IncompatibleSlopes(sa, sb));
    }
    Ok(section_normal_form(a) == section_normal_form(b))
}

/// Summary of the pants gluing sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingCensus {
    pub pants_states: usize,
    pub pairs: usize,
    /// Distinct zero-torsion configurations, by picture number.
    pub configurations: Vec<u8>,
    pub torsion_pairs: Vec<(PantsName, PantsName)>,
    pub overtwisted_pairs: usize,
    /// Pictures left after the solid torus filter.
    pub after_filter: Vec<u8>,
    /// Section-change classes of those, with the relative Euler class of each.
    pub classes: Vec<(Vec<u8>, i64)>,
}

pub fn gluing_census(states: &[PantsState]) -> GluingCensus {
    let sweep = gluing_sweep(states);
    let mut pictures: BTreeMap<u8, DividingSetState> = BTreeMap::new();
    let mut torsion_pairs = Vec::new();
    let mut overtwisted_pairs = 0;
    for (a, b, outcome) in sweep.iter() {
        match outcome {
            ShirtOutcome::Shirt(p) => {
                pictures.insert(p.number, p.state.clone());
            }
            ShirtOutcome::Torsion(_) => torsion_pairs.push((*a, *b)),
            ShirtOutcome::Overtwisted(_) => overtwisted_pairs += 1,
        }
    }
    let after_filter: Vec<u8> = pictures
        .iter()
        .filter(|(_, s)| filter_solid_torus_gluing(s) == FilterVerdict::TightCandidate)
        .map(|(&n, _)| n)
        .collect();
    let mut classes: Vec<(Vec<u8>, i64)> = Vec::new();
    for &n in &after_filter {
        let s = &pictures[&n];
        let existing = classes.iter_mut().find(|(members, _)| {
            section_change_equivalent(&pictures[&members[0]], s).unwrap_or(false)
        });
        match existing {
            Some((members, _)) => members.push(n),
            None => classes.push((vec![n], relative_euler_class(s))),
        }
    }
    GluingCensus {
        pants_states: states.len(),
        pairs: sweep.len(),
        configurations: pictures.keys().copied().collect(),
        torsion_pairs,
        overtwisted_pairs,
        after_filter,
        classes,
    }
}

/// The three shirt structures with all boundary slopes 0, by relative Euler class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ShirtClass {
    /// `e = -2`.
    Negative,
    /// `e = 0`; its boundary region signs are mixed.
    Zero,
    /// `e = 2`.
    Positive,
}

impl ShirtClass {
    pub const ALL: [ShirtClass; 3] = [ShirtClass::Negative, ShirtClass::Zero, ShirtClass::Positive];

    pub fn euler(self) -> i64 {
        match self {
            ShirtClass::Negative => -2,
            ShirtClass::Zero => 0,
            ShirtClass::Positive => 2,
        }
    }
}

/// Shirt structure combined with a structure on the toric annulus with
/// slopes `0` and `s`, the latter indexed by its number `k` of positive
/// basic slices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShirtCandidate {
    pub shirt: ShirtClass,
    pub positive_slices: i64,
    pub sign_matched: bool,
    /// Relative Euler class of the union: `e(shirt) + 2k - s`.
    pub euler: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShirtAudit {
    pub s: i64,
    pub raw: u64,
    pub sign_matched: u64,
    pub classes: u64,
    pub candidates: Vec<ShirtCandidate>,
}

/// Upper bound on structures on {shirt} × S¹ with boundary slopes `(s, 0, 0, 0)`.
///
/// Each of the three shirt structures meets each of the `s + 1` annulus
/// structures. The region signs along the glued torus must agree: the mixed
/// shirt only accepts the annulus whose slices are all negative. Candidates
/// with equal relative Euler class are related by a change of section.
pub fn shirt_count(s: i64) -> ShirtAudit {
    assert!(s >= 0, "s is a sum of floors of positive rationals");
    let mut candidates = Vec::new();
    for shirt in ShirtClass::ALL {
        for k in 0..=s {
            let sign_matched = shirt != ShirtClass::Zero || k == 0;
            candidates.push(ShirtCandidate {
                shirt,
                positive_slices: k,
                sign_matched,
                euler: shirt.euler() + 2 * k - s,
            });
        }
    }
    let matched: Vec<&ShirtCandidate> = candidates.iter().filter(|c| c.sign_matched).collect();
    let mut eulers: Vec<i64> = matched.iter().map(|c| c.euler).collect();
    eulers.sort_unstable();
    eulers.dedup();
    ShirtAudit {
        s,
        raw: candidates.len() as u64,
        sign_matched: matched.len() as u64,
        classes: eulers.len() as u64,
        candidates,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex::pants::{enumerate_pants_states, pants_state};

    #[test]
    fn pictures_are_valid() {
        for n in 1..=8 {
            assert_eq!(picture(n).state.validate(), Ok(()), "picture {n}");
        }
        assert_eq!(torsion_state().validate(), Ok(()));
        assert!(!torsion_state().has_contractible_curve());
    }

    #[test]
    fn census() {
        let c = gluing_census(&enumerate_pants_states());
        assert_eq!(c.pants_states, 9);
        assert_eq!(c.pairs, 81);
        assert_eq!(c.configurations, vec![1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(
            c.torsion_pairs,
            vec![
                (PantsName::E, PantsName::EPrime),
                (PantsName::EPrime, PantsName::E)
            ]
        );
        assert_eq!(c.after_filter, vec![1, 2, 3, 4]);
        assert_eq!(
            c.classes,
            vec![(vec![1, 2], 0), (vec![3], -2), (vec![4], 2)]
        );
    }

    #[test]
    fn gluing_examples() {
        let e = pants_state(PantsName::E);
        let e2 = pants_state(PantsName::EPrime);
        assert!(matches!(glue_pants_pair(&e, &e2), ShirtOutcome::Torsion(_)));
        let b2 = pants_state(PantsName::BPrime);
        assert!(matches!(
            glue_pants_pair(&e, &b2),
            ShirtOutcome::Overtwisted(_)
        ));
    }

    #[test]
    fn filter_and_euler() {
        assert_eq!(
            filter_solid_torus_gluing(&picture(5).state),
            FilterVerdict::Overtwisted
        );
        assert_eq!(
            filter_solid_torus_gluing(&picture(3).state),
            FilterVerdict::TightCandidate
        );
        assert_eq!(
            filter_solid_torus_gluing(&picture(1).state),
            FilterVerdict::TightCandidate
        );
        assert_eq!(relative_euler_class(&picture(3).state), -2);
        assert_eq!(relative_euler_class(&picture(4).state), 2);
        assert_eq!(relative_euler_class(&picture(1).state), 0);
        assert_eq!(relative_euler_class(&picture(2).state), 0);
    }

    #[test]
    fn section_change() {
        let (p1, p2) = (picture(1).state, picture(2).state);
        assert!(section_change_equivalent(&p1, &p2).unwrap());
        assert!(!section_change_equivalent(&picture(3).state, &picture(4).state).unwrap());
        let mut shifted = p2.clone();
        shifted.boundary_slopes = vec![1, 1, 0, 0];
        let mut base = p1.clone();
        base.boundary_slopes = vec![2, 0, 0, 0];
        assert!(section_change_equivalent(&base, &shifted).unwrap());
        assert_eq!(
            section_change_equivalent(&p1, &shifted),
            Err(Error::IncompatibleSlopes(0, 2))
        );
    }

    #[test]
    fn shirt_count_audit() {
        for s in 0..=20 {
            let a = shirt_count(s);
            let s = s as u64;
            assert_eq!(
                (a.raw, a.sign_matched, a.classes),
                (3 * s + 3, 2 * s + 3, s + 3)
            );
        }
        assert_eq!(shirt_count(1).classes, 4);
    }
}
