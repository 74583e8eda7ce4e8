//! Combinatorial dividing sets on planar surfaces with two endpoints on every
//! boundary circle.
//!
//! Boundary `b` carries slots `(b, 0)` and `(b, 1)`, cutting it into segment
//! `(b, 0)` from slot 0 to slot 1 and segment `(b, 1)` from slot 1 back to
//! slot 0. Walking a region boundary along segment `(b, k)` reaches slot
//! `(b, k+1)`, crosses its arc and continues along the segment starting at the
//! partner slot. The cycles of that walk are the boundary circles of the
//! complementary regions that touch the surface boundary.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Surface {
    Disc,
    Annulus,
    Pants,
    Shirt,
}

impl Surface {
    pub fn boundary_count(self) -> usize {
        match self {
            Surface::Disc => 1,
            Surface::Annulus => 2,
            Surface::Pants => 3,
            Surface::Shirt => 4,
        }
    }

    /// `2 - #boundary`.
    pub fn euler_characteristic(self) -> i64 {
        2 - self.boundary_count() as i64
    }

    fn tag(self) -> &'static str {
        match self {
            Surface::Disc => "disc",
            Surface::Annulus => "annulus",
            Surface::Pants => "pants",
            Surface::Shirt => "shirt",
        }
    }
}

/// `(boundary, index)` with index 0 or 1. Used both for endpoint slots and
/// for the segment starting at that slot.
pub type Slot = (usize, usize);

/// Complementary region: the boundary segments it contains, how many sides of
/// closed dividing curves bound it, and its sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Region {
    pub segments: Vec<Slot>,
    pub curve_sides: usize,
    pub sign: Sign,
}

/// A bypass half-disc recorded on a boundary, with its sign.
pub type BypassMark = (usize, Sign);

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DividingSetState {
    pub surface: Surface,
    pub arcs: Vec<(Slot, Slot)>,
    /// Closed dividing curves, each recorded by the two regions it separates.
    pub closed_curves: Vec<(usize, usize)>,
    pub regions: Vec<Region>,
    pub bypasses: Vec<BypassMark>,
    /// Half twists across the incompressible annulus.
    pub twist: i32,
    pub boundary_slopes: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Invalid {
    BadSlots,
    RegionsDoNotPartitionCycles,
    EulerCharacteristic { expected: i64, got: i64 },
    SignsDoNotAlternate { boundary: usize },
    CurveSidesMismatch,
}

impl DividingSetState {
    pub fn boundary_count(&self) -> usize {
        self.surface.boundary_count()
    }

    pub fn partner(&self, s: Slot) -> Option<Slot> {
        self.arcs.iter().find_map(|&(a, b)| match (a == s, b == s) {
            (true, _) => Some(b),
            (_, true) => Some(a),
            _ => None,
        })
    }

    /// Face-walk successor of a segment.
    pub fn succ(&self, seg: Slot) -> Option<Slot> {
        self.partner((seg.0, (seg.1 + 1) % 2))
    }

    /// Cycles of the face walk, each starting at its smallest segment.
    pub fn boundary_cycles(&self) -> Vec<Vec<Slot>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for b in 0..self.boundary_count() {
            for k in 0..2 {
                let start = (b, k);
                if seen.contains(&start) {
                    continue;
                }
                let mut cycle = vec![start];
                seen.insert(start);
                let mut cur = start;
                while let Some(next) = self.succ(cur) {
                    if next == start || !seen.insert(next) {
                        break;
                    }
                    cycle.push(next);
                    cur = next;
                }
                out.push(cycle);
            }
        }
        out
    }

    fn region_of(&self, seg: Slot) -> Option<usize> {
        self.regions.iter().position(|r| r.segments.contains(&seg))
    }

    /// Number of face cycles in each region.
    fn cycles_per_region(&self) -> Option<Vec<usize>> {
        let mut counts = vec![0; self.regions.len()];
        for cycle in self.boundary_cycles() {
            let r = self.region_of(cycle[0])?;
            if cycle.iter().any(|&s| self.region_of(s) != Some(r)) {
                return None;
            }
            counts[r] += 1;
        }
        Some(counts)
    }

    /// Euler characteristic of each region, which is planar.
    pub fn region_euler(&self) -> Vec<i64> {
        let cycles = self
            .cycles_per_region()
            .unwrap_or_else(|| vec![0; self.regions.len()]);
        self.regions
            .iter()
            .zip(cycles)
            .map(|(r, c)| 2 - c as i64 - r.curve_sides as i64)
            .collect()
    }

    /// Checks slot pairing, that regions partition the face cycles, the Euler
    /// characteristic count, curve sides and sign alternation.
    pub fn validate(&self) -> Result<(), Invalid> {
        let n = self.boundary_count();
        let mut slots: Vec<Slot> = self.arcs.iter().flat_map(|&(a, b)| [a, b]).collect();
        slots.sort_unstable();
        let expected: Vec<Slot> = (0..n).flat_map(|b| [(b, 0), (b, 1)]).collect();
        if slots != expected {
            return Err(Invalid::BadSlots);
        }
        let mut segs: Vec<Slot> = self
            .regions
            .iter()
            .flat_map(|r| r.segments.clone())
            .collect();
        segs.sort_unstable();
        if segs != expected || self.cycles_per_region().is_none() {
            return Err(Invalid::RegionsDoNotPartitionCycles);
        }
        for (i, r) in self.regions.iter().enumerate() {
            let sides = self
                .closed_curves
                .iter()
                .filter(|&&(a, b)| a == i || b == i)
                .count()
                + self
                    .closed_curves
                    .iter()
                    .filter(|&&(a, b)| a == i && b == i)
                    .count();
            if sides != r.curve_sides {
                return Err(Invalid::CurveSidesMismatch);
            }
        }
        let got: i64 = self.region_euler().iter().sum();
        let expected = self.surface.euler_characteristic() + self.arcs.len() as i64;
        if got != expected {
            return Err(Invalid::EulerCharacteristic { expected, got });
        }
        for b in 0..n {
            let (r0, r1) = (self.region_of((b, 0)), self.region_of((b, 1)));
            match (r0, r1) {
                (Some(x), Some(y)) if self.regions[x].sign != self.regions[y].sign => {}
                _ => return Err(Invalid::SignsDoNotAlternate { boundary: b }),
            }
        }
        for &(a, b) in &self.closed_curves {
            if self.regions[a].sign == self.regions[b].sign {
                return Err(Invalid::SignsDoNotAlternate {
                    boundary: usize::MAX,
                });
            }
        }
        Ok(())
    }

    /// A closed dividing curve bounding a disc gives an overtwisted disc.
    pub fn has_contractible_curve(&self) -> bool {
        let cycles = self.cycles_per_region().unwrap_or_default();
        self.regions
            .iter()
            .zip(cycles)
            .any(|(r, c)| c == 0 && r.curve_sides == 1)
    }

    /// `χ(R+) - χ(R-)`.
    pub fn relative_euler_class(&self) -> i64 {
        self.regions
            .iter()
            .zip(self.region_euler())
            .map(|(r, chi)| match r.sign {
                Sign::Plus => chi,
                Sign::Minus => -chi,
            })
            .sum()
    }

    /// Global sign flip.
    pub fn mirror(&self) -> DividingSetState {
        let mut out = self.clone();
        for r in &mut out.regions {
            r.sign = -r.sign;
        }
        for m in &mut out.bypasses {
            m.1 = -m.1;
        }
        out
    }

    /// Regions and arcs in a canonical order so that equal configurations
    /// compare equal.
    pub fn canonical(&self) -> DividingSetState {
        let mut out = self.clone();
        out.arcs = self
            .arcs
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        out.arcs.sort_unstable();
        let mut order: Vec<usize> = (0..self.regions.len()).collect();
        let key = |i: usize| {
            let mut r = self.regions[i].clone();
            r.segments.sort_unstable();
            r
        };
        order.sort_by_key(|&i| key(i));
        let new_index = |old: usize| order.iter().position(|&i| i == old).expect("present");
        out.regions = order.iter().map(|&i| key(i)).collect();
        out.closed_curves = self
            .closed_curves
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (new_index(a), new_index(b));
                (a.min(b), a.max(b))
            })
            .collect();
        out.closed_curves.sort_unstable();
        out.bypasses.sort_unstable();
        out
    }
}

/// `true` iff some arc joins the two slots of boundary `b` and cuts off a
/// half-disc containing nothing but one segment of `b`.
pub fn detect_bypass(state: &DividingSetState, b: usize) -> bool {
    let parallel = state.arcs.iter().any(|&(x, y)| x.0 == b && y.0 == b);
    if !parallel {
        return false;
    }
    let cycles = state.boundary_cycles();
    (0..2).any(|k| {
        let seg = (b, k);
        let Some(r) = state.region_of(seg) else {
            return false;
        };
        let region = &state.regions[r];
        region.curve_sides == 0
            && region.segments == [seg]
            && cycles.iter().any(|c| c.as_slice() == [seg])
    })
}

impl fmt::Display for DividingSetState {
    /// `surface | arcs as slot permutation | region signs | bypasses | twist`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        let slot = |s: Slot| 2 * s.0 + s.1;
        let arcs: Vec<String> = c
            .arcs
            .iter()
            .map(|&(a, b)| format!("{}-{}", slot(a), slot(b)))
            .collect();
        let regions: Vec<String> = c
            .regions
            .iter()
            .map(|r| {
                let segs: Vec<String> = r.segments.iter().map(|&s| slot(s).to_string()).collect();
                format!("{}{{{}}}", r.sign, segs.join(","))
            })
            .collect();
        let marks: Vec<String> = c.bypasses.iter().map(|(b, s)| format!("{s}{b}")).collect();
        write!(
            f,
            "{} | {} | {} | bypass [{}] | twist {}",
            self.surface.tag(),
            arcs.join(" "),
            regions.join(" "),
            marks.join(" "),
            self.twist
        )?;
        if !c.closed_curves.is_empty() {
            write!(f, " | closed {}", c.closed_curves.len())?;
        }
        Ok(())
    }
}
