//! Seifert invariants `M(0; -q1/p1, ..., -q4/p4)`, their Euler number,
//! attaching maps and the boundary slopes of the exceptional solid tori.

use std::fmt;

use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::slope::{
    act, convergents, neg_cf, parse_rational, CfMode, Convergents, NegContinuedFraction, Rational,
    Slope, UnimodularMap,
};

/// One exceptional fiber with invariant `-q/p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fiber {
    pub p: i64,
    pub q: i64,
}

impl Fiber {
    pub fn new(p: i64, q: i64) -> Result<Fiber> {
        if p < 2 || q < 1 || p.gcd(&q) != 1 {
            return Err(Error::InvalidFiber { p, q });
        }
        Ok(Fiber { p, q })
    }

    /// `-q/p`.
    pub fn coefficient(&self) -> Rational {
        Rational::new(-self.q, self.p)
    }
}

impl fmt::Display for Fiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "-{}/{}", self.q, self.p)
    }
}

/// Four exceptional fibers over the sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeifertInvariants {
    pub fibers: [Fiber; 4],
}

impl SeifertInvariants {
    pub fn new(pairs: [(i64, i64); 4]) -> Result<SeifertInvariants> {
        let mut fibers = [Fiber { p: 2, q: 1 }; 4];
        for (slot, (p, q)) in fibers.iter_mut().zip(pairs) {
            *slot = Fiber::new(p, q)?;
        }
        Ok(SeifertInvariants { fibers })
    }

    /// Builds invariants from arbitrary non-integral fiber coefficients.
    ///
    /// Coefficients that are already negative are kept as given. Positive
    /// ones are shifted into `(-1, 0)` and the integer excess is pushed onto
    /// the fibers with the smallest floors. The sum of floors is unchanged, so
    /// this stays the same manifold. A normalized form with every coefficient
    /// negative exists exactly when `e0 <= -4`; otherwise `UnsupportedRegime`
    /// is returned.
    pub fn from_coefficients(coeffs: &[Rational; 4]) -> Result<SeifertInvariants> {
        for c in coeffs {
            if c.is_integer() {
                return Err(Error::InvalidFiber {
                    p: *c.denom(),
                    q: -c.numer(),
                });
            }
        }
        let e0: i64 = coeffs.iter().map(|c| c.floor().to_integer()).sum();
        if e0 > -4 {
            return Err(Error::UnsupportedRegime { e0 });
        }
        let mut c = *coeffs;
        let mut excess = 0;
        for r in c.iter_mut().filter(|r| r.is_positive()) {
            let k = r.floor().to_integer() + 1;
            *r -= k;
            excess += k;
        }
        for _ in 0..excess {
            let i = (0..4)
                .min_by_key(|&i| (c[i].floor().to_integer(), i))
                .expect("four fibers");
            c[i] += 1;
        }
        let pairs = c.map(|r| (*r.denom(), -r.numer()));
        SeifertInvariants::new(pairs)
    }

    pub fn coefficients(&self) -> [Rational; 4] {
        self.fibers.map(|f| f.coefficient())
    }
}

impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.fibers.iter().map(Fiber::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parse the fiber grammar: four comma-separated signed fractions such as
/// `-1/2,-1/2,-1/2,-3/5`.
pub fn parse_coefficients(s: &str) -> Result<[Rational; 4]> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(Error::Parse(format!(
            "expected 4 fiber coefficients, got {}",
            parts.len()
        )));
    }
    let mut out = [Rational::from_integer(0); 4];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = parse_rational(part)?;
    }
    Ok(out)
}

/// `e0 = sum of floor(-q_i/p_i)`.
pub fn euler_number(inv: &SeifertInvariants) -> i64 {
    inv.fibers
        .iter()
        .map(|f| f.coefficient().floor().to_integer())
        .sum()
}

/// Continued fraction, convergents and attaching map of one fiber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberData {
    pub p: i64,
    pub q: i64,
    pub cf: NegContinuedFraction,
    pub convergents: Convergents,
    pub u: i64,
    pub v: i64,
    /// `(p u; q v)`.
    pub attaching_map: UnimodularMap,
}

pub fn fiber_data(p: i64, q: i64) -> Result<FiberData> {
    let f = Fiber::new(p, q)?;
    let cf = neg_cf(f.coefficient(), CfMode::Relaxed)?;
    let conv = convergents(&cf);
    let (u, v) = (conv.u, conv.v);
    debug_assert_eq!((conv.p[cf.m()], conv.q[cf.m()]), (p, q));
    let attaching_map = UnimodularMap::new(p, u, q, v)?;
    debug_assert_eq!(attaching_map.det(), 1);
    Ok(FiberData {
        p,
        q,
        cf,
        convergents: conv,
        u,
        v,
        attaching_map,
    })
}

/// Dividing slope on the boundary of the exceptional solid torus once the
/// ambient slope has been pushed up to `s = floor(q/p)`:
/// `-(q - s p)/(v - s u)`, the pullback of `s` under the attaching map.
/// With `s = -(a0 + 1)` this is `-(q + (a0+1)p)/(v + (a0+1)u)`.
pub fn normalized_boundary_slope(f: &FiberData) -> Slope {
    let k = f.cf.a0() + 1;
    Slope::new(-(f.q + k * f.p), f.v + k * f.u).expect("primitive")
}

/// The same slope computed by pulling the ambient slope back along `A^-1`.
pub fn pullback_boundary_slope(f: &FiberData) -> Slope {
    act(
        &f.attaching_map.inverse(),
        Slope::integer(Integer::div_floor(&f.q, &f.p)),
    )
}

/// Shift integral boundary slopes by integers summing to zero.
pub fn section_change(slopes: [i64; 4], shifts: [i64; 4]) -> Result<[i64; 4]> {
    if shifts.iter().sum::<i64>() != 0 {
        return Err(Error::BadShift(shifts.to_vec()));
    }
    Ok([0, 1, 2, 3].map(|i| slopes[i] + shifts[i]))
}
