//! Legendrian realizations of integral surgery diagrams and the resulting
//! lower bound on the number of tight structures.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seifert::{euler_number, fiber_data, SeifertInvariants};
use crate::surgery::{integral_diagram, SurgeryDiagram};

/// A Legendrian unknot with `|rot| <= |tb| - 1` and `rot = tb + 1 mod 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LegendrianUnknot {
    pub tb: i64,
    pub rot: i64,
}

impl LegendrianUnknot {
    pub fn new(tb: i64, rot: i64) -> Option<LegendrianUnknot> {
        let ok = tb <= -1 && rot.abs() < -tb && (rot - tb - 1).rem_euclid(2) == 0;
        ok.then_some(LegendrianUnknot { tb, rot })
    }
}

/// Rotation numbers of Legendrian unknots with `tb = framing + 1`, ascending.
pub fn realizations(framing: i64) -> Result<Vec<i64>> {
    if framing >= -1 {
        return Err(Error::FramingTooLarge(framing));
    }
    Ok((framing + 2..=-framing - 2).step_by(2).collect())
}

/// One rotation number per component, in [`SurgeryDiagram::ordered_ids`] order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RealizationVector {
    pub ids: Vec<usize>,
    pub rots: Vec<i64>,
}

/// Lazy Cartesian product of per-component rotation lists.
#[derive(Clone, Debug)]
pub struct Realizations {
    ids: Vec<usize>,
    lists: Vec<Vec<i64>>,
    idx: Vec<usize>,
    done: bool,
}

impl Realizations {
    pub fn new(d: &SurgeryDiagram) -> Result<Realizations> {
        if !d.is_integral() {
            return Err(Error::NotIntegral);
        }
        let ids = d.ordered_ids();
        let lists = ids
            .iter()
            .map(|&i| realizations(d.components[i].coefficient.to_integer()))
            .collect::<Result<Vec<_>>>()?;
        let idx = vec![0; lists.len()];
        Ok(Realizations {
            ids,
            lists,
            idx,
            done: false,
        })
    }

    /// Size of the product without walking it.
    pub fn len(&self) -> u128 {
        self.lists.iter().map(|l| l.len() as u128).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn current(&self) -> Vec<i64> {
        self.idx
            .iter()
            .zip(&self.lists)
            .map(|(&i, l)| l[i])
            .collect()
    }

    /// Step the odometer, last component fastest. Returns `false` once exhausted.
    fn advance(&mut self) -> bool {
        for k in (0..self.idx.len()).rev() {
            self.idx[k] += 1;
            if self.idx[k] < self.lists[k].len() {
                return true;
            }
            self.idx[k] = 0;
        }
        false
    }

    /// Walk the whole product without allocating, returning how many
    /// vectors it produced.
    pub fn count_by_walking(mut self) -> u128 {
        let mut n = 1;
        while self.advance() {
            n += 1;
        }
        n
    }
}

impl Iterator for Realizations {
    type Item = RealizationVector;

    fn next(&mut self) -> Option<RealizationVector> {
        if self.done {
            return None;
        }
        let out = RealizationVector {
            ids: self.ids.clone(),
            rots: self.current(),
        };
        self.done = !self.advance();
        Some(out)
    }
}

/// Every realization vector of the diagram.
pub fn enumerate_stein_structures(d: &SurgeryDiagram) -> Result<Vec<RealizationVector>> {
    Ok(Realizations::new(d)?.collect())
}

/// `|(e0 + 1) * prod_i prod_{j >= 1} (a_j^i + 1)|`.
pub fn closed_form_count(inv: &SeifertInvariants) -> Result<u128> {
    let mut n = i128::from(euler_number(inv) + 1);
    for f in &inv.fibers {
        let fd = fiber_data(f.p, f.q)?;
        for &a in fd.cf.tail() {
            n *= i128::from(a + 1);
        }
    }
    Ok(n.unsigned_abs())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    pub count: u128,
    pub vectors: Vec<RealizationVector>,
    /// Rotation vectors pairwise distinct, hence distinct Chern classes of the
    /// Stein fillings, hence pairwise non-isotopic contact structures.
    pub distinct_chern: bool,
}

fn check_regime(inv: &SeifertInvariants) -> Result<()> {
    match euler_number(inv) {
        e0 if e0 > -4 => Err(Error::UnsupportedRegime { e0 }),
        _ => Ok(()),
    }
}

/// Enumerate every realization and certify they are pairwise distinct.
pub fn lower_bound(inv: &SeifertInvariants) -> Result<LowerBound> {
    check_regime(inv)?;
    let vectors = enumerate_stein_structures(&integral_diagram(inv)?)?;
    let mut sorted: Vec<&Vec<i64>> = vectors.iter().map(|v| &v.rots).collect();
    sorted.sort();
    let distinct_chern = sorted.windows(2).all(|w| w[0] != w[1]);
    Ok(LowerBound {
        count: vectors.len() as u128,
        vectors,
        distinct_chern,
    })
}

/// Count realizations by walking the product lazily; for large sweeps.
pub fn lower_bound_count(inv: &SeifertInvariants) -> Result<u128> {
    check_regime(inv)?;
    Ok(Realizations::new(&integral_diagram(inv)?)?.count_by_walking())
}
