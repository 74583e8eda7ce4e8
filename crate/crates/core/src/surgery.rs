//! Tree-shaped rational surgery diagrams, Rolfsen twists, slam dunks and the
//! first-homology certificate for the moves.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seifert::{fiber_data, SeifertInvariants};
use crate::slope::{neg_cf, CfMode, Rational};
use crate::snf::{det, invariant_factors, Matrix};

/// An unknot in the diagram with its surgery coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub id: usize,
    pub coefficient: Rational,
}

impl Component {
    pub fn is_integral(&self) -> bool {
        self.coefficient.is_integer()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Move {
    Rolfsen { component: usize, k: i64 },
    SlamDunk { component: usize, chain: Vec<i64> },
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Rolfsen { component, k } => write!(f, "twist {component} by {k}"),
            Move::SlamDunk { component, chain } => {
                let parts: Vec<String> = chain.iter().map(i64::to_string).collect();
                write!(f, "slam dunk {component} into [{}]", parts.join(", "))
            }
        }
    }
}

/// Surgery on a tree of unknots, each edge a +1 linking.
///
/// Component `0` is the central circle. Ids are indices into `components`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryDiagram {
    pub components: Vec<Component>,
    pub edges: Vec<(usize, usize)>,
    pub history: Vec<Move>,
}

/// A coefficient as it appears in JSON: integers stay integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Integer(i64),
    Fraction(String),
}

impl From<Rational> for Coefficient {
    fn from(r: Rational) -> Coefficient {
        if r.is_integer() {
            Coefficient::Integer(r.to_integer())
        } else {
            Coefficient::Fraction(r.to_string())
        }
    }
}

/// `{central, chains}` view of a star-shaped diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramView {
    pub central: Coefficient,
    pub chains: Vec<Vec<Coefficient>>,
}

impl SurgeryDiagram {
    pub fn single(framing: i64) -> SurgeryDiagram {
        SurgeryDiagram {
            components: vec![Component {
                id: 0,
                coefficient: framing.into(),
            }],
            edges: vec![],
            history: vec![],
        }
    }

    /// Central circle with framing `central` and integral chains hanging off it.
    pub fn plumbing(central: i64, chains: &[Vec<i64>]) -> SurgeryDiagram {
        let mut d = SurgeryDiagram::single(central);
        for chain in chains {
            let mut prev = 0;
            for &f in chain {
                prev = d.attach(prev, f.into());
            }
        }
        d
    }

    /// Integral linear chain; the first entry plays the central role.
    pub fn chain(framings: &[i64]) -> SurgeryDiagram {
        let (&first, rest) = framings.split_first().expect("nonempty chain");
        SurgeryDiagram::plumbing(first, &[rest.to_vec()])
    }

    fn attach(&mut self, parent: usize, coefficient: Rational) -> usize {
        let id = self.components.len();
        self.components.push(Component { id, coefficient });
        self.edges.push((parent, id));
        id
    }

    pub fn coefficient(&self, id: usize) -> Result<Rational> {
        self.components
            .get(id)
            .map(|c| c.coefficient)
            .ok_or(Error::UnknownComponent(id))
    }

    pub fn neighbors(&self, id: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| match (a == id, b == id) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.components.iter().all(Component::is_integral)
    }

    /// Central component first, then each chain root to leaf, chains in the
    /// order they were attached.
    pub fn ordered_ids(&self) -> Vec<usize> {
        let mut out = vec![0];
        for start in self.neighbors(0) {
            let (mut prev, mut cur) = (0, start);
            loop {
                out.push(cur);
                match self.neighbors(cur).into_iter().find(|&n| n != prev) {
                    Some(next) => (prev, cur) = (cur, next),
                    None => break,
                }
            }
        }
        out
    }

    pub fn view(&self) -> DiagramView {
        let ids = self.ordered_ids();
        let mut chains: Vec<Vec<Coefficient>> = Vec::new();
        for &id in &ids[1..] {
            if self.neighbors(id).contains(&0) {
                chains.push(Vec::new());
            }
            let c = self.components[id].coefficient;
            chains
                .last_mut()
                .expect("chain started at a neighbor of 0")
                .push(c.into());
        }
        DiagramView {
            central: self.components[0].coefficient.into(),
            chains,
        }
    }
}

impl fmt::Display for SurgeryDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.view();
        let show = |c: &Coefficient| match c {
            Coefficient::Integer(n) => n.to_string(),
            Coefficient::Fraction(s) => s.clone(),
        };
        write!(f, "central {}", show(&v.central))?;
        for (i, chain) in v.chains.iter().enumerate() {
            let parts: Vec<String> = chain.iter().map(show).collect();
            write!(f, "; chain {}: {}", i + 1, parts.join(", "))?;
        }
        Ok(())
    }
}

/// Central 0-framed unknot with one meridian per fiber carrying `p_i/q_i`.
pub fn seifert_to_diagram(inv: &SeifertInvariants) -> SurgeryDiagram {
    let mut d = SurgeryDiagram::single(0);
    for f in &inv.fibers {
        d.attach(0, Rational::new(f.p, f.q));
    }
    d
}

/// Twist `k` times around a leaf: its coefficient `p/q` becomes `p/(q + kp)`
/// and the neighbor's coefficient shifts by `k`.
pub fn rolfsen_twist(d: &SurgeryDiagram, id: usize, k: i64) -> Result<SurgeryDiagram> {
    if k == 0 {
        return Err(Error::ZeroTwist);
    }
    let r = d.coefficient(id)?;
    let nbrs = d.neighbors(id);
    if nbrs.len() > 1 {
        return Err(Error::NotTerminal(id));
    }
    let (p, q) = (*r.numer(), *r.denom());
    if q + k * p == 0 {
        return Err(Error::NotRational(id));
    }
    let mut out = d.clone();
    out.components[id].coefficient = Rational::new(p, q + k * p);
    for n in nbrs {
        out.components[n].coefficient += k;
    }
    out.history.push(Move::Rolfsen { component: id, k });
    Ok(out)
}

/// Replace a non-integral leaf coefficient `r < -1` by the integral chain of
/// its strict continued fraction.
pub fn slam_dunk_expand(d: &SurgeryDiagram, id: usize) -> Result<SurgeryDiagram> {
    let r = d.coefficient(id)?;
    if d.neighbors(id).len() > 1 {
        return Err(Error::NotTerminal(id));
    }
    if r.is_integer() {
        return Err(Error::IntegerAlready(id));
    }
    if r >= -Rational::one() {
        return Err(Error::ExpansionImpossible(r.to_string()));
    }
    let cf = neg_cf(r, CfMode::Strict)?;
    let mut out = d.clone();
    let coeffs = cf.coeffs().to_vec();
    out.components[id].coefficient = coeffs[0].into();
    let mut prev = id;
    for &b in &coeffs[1..] {
        prev = out.attach(prev, b.into());
    }
    out.history.push(Move::SlamDunk {
        component: id,
        chain: coeffs,
    });
    Ok(out)
}

/// Expansion `r = c0 - 1/(c1 - ...)` with `c0 = floor(r)`; every later term
/// is at most -2. Works for any rational.
fn floor_expansion(r: Rational) -> Vec<i64> {
    let mut out = Vec::new();
    let mut x = r;
    loop {
        let c = x.floor().to_integer();
        out.push(c);
        let frac = x - Rational::from_integer(c);
        if frac.is_zero() {
            return out;
        }
        x = -frac.recip();
    }
}

/// Same 3-manifold with every rational leaf replaced by an integral chain.
/// Not recorded as a move; used only to compute homology.
pub fn to_integral(d: &SurgeryDiagram) -> SurgeryDiagram {
    let mut out = SurgeryDiagram {
        components: d.components.clone(),
        edges: d.edges.clone(),
        history: vec![],
    };
    for c in &d.components {
        if c.is_integral() {
            continue;
        }
        let chain = floor_expansion(c.coefficient);
        out.components[c.id].coefficient = chain[0].into();
        let mut prev = c.id;
        for &b in &chain[1..] {
            prev = out.attach(prev, b.into());
        }
    }
    out
}

/// Symmetric linking matrix of an integral diagram; it presents `H1`.
pub type PresentationMatrix = Matrix;

/// Framings on the diagonal, linking numbers off it.
pub fn presentation_matrix(d: &SurgeryDiagram) -> Result<PresentationMatrix> {
    if !d.is_integral() {
        return Err(Error::NotIntegral);
    }
    let n = d.components.len();
    let mut m = vec![vec![0i128; n]; n];
    for c in &d.components {
        m[c.id][c.id] = i128::from(c.coefficient.to_integer());
    }
    for &(a, b) in &d.edges {
        m[a][b] = 1;
        m[b][a] = 1;
    }
    Ok(m)
}

/// Order of the first homology, `0` when it is infinite. Rational leaves are
/// expanded to integral chains first.
pub fn h1_order(d: &SurgeryDiagram) -> u128 {
    let m = presentation_matrix(&to_integral(d)).expect("expanded diagram is integral");
    let f = invariant_factors(&m);
    if f.contains(&0) {
        0
    } else {
        f.iter().map(|x| x.unsigned_abs()).product()
    }
}

/// Independent route: rows `numerator_i e_i + denominator_i * linking_i`
/// present the homology of a rational diagram directly.
pub fn h1_order_rational(d: &SurgeryDiagram) -> u128 {
    let n = d.components.len();
    let mut m = vec![vec![0i128; n]; n];
    for c in &d.components {
        m[c.id][c.id] = i128::from(*c.coefficient.numer());
    }
    for &(a, b) in &d.edges {
        m[a][b] = i128::from(*d.components[a].coefficient.denom());
        m[b][a] = i128::from(*d.components[b].coefficient.denom());
    }
    det(&m).unsigned_abs()
}

/// `|sum_i q_i prod_{j != i} p_j|`.
pub fn h1_order_closed_form(inv: &SeifertInvariants) -> u128 {
    let f = &inv.fibers;
    let s: i128 = (0..4)
        .map(|i| {
            let others: i128 = (0..4)
                .filter(|&j| j != i)
                .map(|j| i128::from(f[j].p))
                .product();
            i128::from(f[i].q) * others
        })
        .sum();
    s.unsigned_abs()
}

/// Every diagram along the way from the Seifert presentation to the integral
/// plumbing, first to last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pipeline {
    pub stages: Vec<SurgeryDiagram>,
}

impl Pipeline {
    pub fn last(&self) -> &SurgeryDiagram {
        self.stages.last().expect("at least the initial diagram")
    }

    /// `h1_order` of every stage.
    pub fn h1_trace(&self) -> Vec<u128> {
        self.stages.iter().map(h1_order).collect()
    }
}

/// Twist each meridian `|a0_i|` times by `-1`, then slam-dunk every
/// non-integral leaf. The central framing ends at `e0` and fiber `i`
/// contributes the chain `[a1, ..., am]` of its continued fraction.
pub fn pipeline(inv: &SeifertInvariants) -> Result<Pipeline> {
    let mut stages = vec![seifert_to_diagram(inv)];
    for (i, f) in inv.fibers.iter().enumerate() {
        let a0 = fiber_data(f.p, f.q)?.cf.a0();
        for _ in 0..a0.abs() {
            let next = rolfsen_twist(stages.last().expect("nonempty"), i + 1, -1)?;
            stages.push(next);
        }
    }
    for id in 1..=4 {
        let cur = stages.last().expect("nonempty");
        if !cur.components[id].is_integral() {
            let next = slam_dunk_expand(cur, id)?;
            stages.push(next);
        }
    }
    Ok(Pipeline { stages })
}

/// Final integral diagram of [`pipeline`].
pub fn integral_diagram(inv: &SeifertInvariants) -> Result<SurgeryDiagram> {
    Ok(pipeline(inv)?.last().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(pairs: [(i64, i64); 4]) -> SeifertInvariants {
        SeifertInvariants::new(pairs).unwrap()
    }

    #[test]
    fn seifert_diagram() {
        let d = seifert_to_diagram(&inv([(5, 3), (2, 1), (2, 1), (2, 1)]));
        assert_eq!(d.components.len(), 5);
        assert_eq!(d.coefficient(0).unwrap(), Rational::from_integer(0));
        assert_eq!(d.coefficient(1).unwrap(), Rational::new(5, 3));
        assert_eq!(d.neighbors(0), vec![1, 2, 3, 4]);
    }

    #[test]
    fn twist_examples() {
        let d = seifert_to_diagram(&inv([(2, 1); 4]));
        let t = rolfsen_twist(&d, 1, -1).unwrap();
        assert_eq!(t.coefficient(1).unwrap(), Rational::from_integer(-2));
        assert_eq!(t.coefficient(0).unwrap(), Rational::from_integer(-1));
        assert_eq!(rolfsen_twist(&d, 1, 0), Err(Error::ZeroTwist));
        assert_eq!(rolfsen_twist(&d, 0, -1), Err(Error::NotTerminal(0)));

        let d = seifert_to_diagram(&inv([(5, 3), (2, 1), (2, 1), (2, 1)]));
        let t = rolfsen_twist(&d, 1, -1).unwrap();
        assert_eq!(t.coefficient(1).unwrap(), Rational::new(-5, 2));
        assert_eq!(h1_order(&t), h1_order(&d));
    }

    #[test]
    fn slam_dunk_examples() {
        let d = seifert_to_diagram(&inv([(5, 3), (2, 1), (2, 1), (2, 1)]));
        let t = rolfsen_twist(&d, 1, -1).unwrap();
        let s = slam_dunk_expand(&t, 1).unwrap();
        assert_eq!(s.coefficient(1).unwrap(), Rational::from_integer(-3));
        assert_eq!(s.coefficient(5).unwrap(), Rational::from_integer(-2));
        assert_eq!(h1_order(&s), h1_order(&t));

        let t2 = rolfsen_twist(&t, 2, -1).unwrap();
        assert_eq!(slam_dunk_expand(&t2, 2), Err(Error::IntegerAlready(2)));
        assert!(matches!(
            slam_dunk_expand(&d, 1),
            Err(Error::ExpansionImpossible(_))
        ));
    }

    #[test]
    fn example_case_pipeline() {
        let p = pipeline(&inv([(2, 1); 4])).unwrap();
        assert_eq!(
            p.last().view(),
            SurgeryDiagram::plumbing(-4, &vec![vec![-2]; 4]).view()
        );
        assert!(p.h1_trace().iter().all(|&h| h == 32));
    }

    #[test]
    fn presentation_examples() {
        let d = SurgeryDiagram::plumbing(-4, &vec![vec![-2]; 4]);
        let m = presentation_matrix(&d).unwrap();
        assert_eq!(
            (0..5).map(|i| m[i][i]).collect::<Vec<_>>(),
            vec![-4, -2, -2, -2, -2]
        );
        assert_eq!(
            presentation_matrix(&SurgeryDiagram::single(-1)).unwrap(),
            vec![vec![-1]]
        );
        assert_eq!(
            presentation_matrix(&SurgeryDiagram::chain(&[-2, -2])).unwrap(),
            vec![vec![-2, 1], vec![1, -2]]
        );
        let r = seifert_to_diagram(&inv([(5, 3), (2, 1), (2, 1), (2, 1)]));
        assert_eq!(presentation_matrix(&r), Err(Error::NotIntegral));
    }

    #[test]
    fn h1_examples() {
        assert_eq!(
            h1_order(&SurgeryDiagram::plumbing(-4, &vec![vec![-2]; 4])),
            32
        );
        assert_eq!(h1_order(&SurgeryDiagram::single(1)), 1);
        assert_eq!(h1_order(&SurgeryDiagram::single(-1)), 1);
        assert_eq!(h1_order(&SurgeryDiagram::chain(&[-2, -2])), 3);
        assert_eq!(h1_order(&SurgeryDiagram::single(0)), 0);
    }

    #[test]
    fn floor_expansion_any_rational() {
        assert_eq!(floor_expansion(Rational::new(2, 5)), vec![0, -3, -2]);
        assert_eq!(floor_expansion(Rational::new(5, 3)), vec![1, -2, -2]);
        assert_eq!(floor_expansion(Rational::from_integer(7)), vec![7]);
    }

    #[test]
    fn view_shape() {
        let d = integral_diagram(&inv([(2, 1), (2, 1), (2, 1), (5, 3)])).unwrap();
        let v = d.view();
        assert_eq!(v.central, Coefficient::Integer(-4));
        assert_eq!(
            v.chains[3],
            vec![Coefficient::Integer(-3), Coefficient::Integer(-2)]
        );
        assert_eq!(d.ordered_ids(), vec![0, 1, 2, 3, 4, 5]);
    }
}
