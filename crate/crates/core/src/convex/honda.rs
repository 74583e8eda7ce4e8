//! Honda's counts for solid tori and toric annuli, and the slope bookkeeping
//! used while thickening the exceptional neighborhoods.

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seifert::FiberData;
use crate::slope::{neg_cf, CfMode, Rational, Slope};

/// `|(r0+1)(r1+1)...(r_{k-1}+1) r_k|` for the strict expansion of `r < -1`.
fn product_formula(r: Rational) -> Result<u128> {
    let cf = neg_cf(r, CfMode::Strict)?;
    let (&last, init) = cf.coeffs().split_last().expect("nonempty");
    let n = init
        .iter()
        .fold(i128::from(last), |acc, &b| acc * i128::from(b + 1));
    Ok(n.unsigned_abs())
}

/// Number of tight structures on the solid torus with the given boundary
/// slope and two dividing curves, the meridian having slope 0.
///
/// Slopes `1/n` (including infinity as `n = 0`) give 1. Any negative slope is
/// first moved by twists along the meridian to `-p/q` with `p > q`, then the
/// product formula applies. Slope 0 and other positive slopes are rejected.
pub fn solid_torus_count(s: Slope) -> Result<u128> {
    if s.is_infinite() || s.y() == 1 || s.y() == -1 {
        return Ok(1);
    }
    if s.y() >= 0 {
        return Err(Error::InvalidSlope(s.to_string()));
    }
    // 1/s = x/y reduced into [-1, 0) by meridian twists 1/s -> 1/s + k.
    let inv = Rational::new(s.x(), s.y());
    let shifted = inv - inv.floor() - Rational::from_integer(1);
    product_formula(shifted.recip())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnnulusCount {
    Count(u128),
    /// Non-rotative layer: a Z-family told apart by holonomy.
    HolonomyFamily,
}

/// Tight minimally twisting structures on `T² × I` with boundary slopes `s0`, `s1`.
///
/// Slopes rotate counterclockwise from `s1` to `s0`. A unimodular change of
/// basis sends `s0` to `-1` and `s1` to `-p/q < -1` (or to infinity, a single
/// basic slice) and the product formula applies. Equal slopes give the
/// holonomy family.
///
/// The layer between a shirt boundary of slope 0 and a torus of slope `s >= 0`
/// is written `(0, s)` with the inner boundary first; it is read as `(s, 0)`
/// and has `s + 1` structures. `(0, 0)` is the empty collar and counts once.
pub fn toric_annulus_count(s0: Slope, s1: Slope) -> Result<AnnulusCount> {
    if s0 == Slope::integer(0) && s1.x() == 1 && s1.y() >= 0 {
        if s1.y() == 0 {
            return Ok(AnnulusCount::Count(1));
        }
        return rotative_count(s1, s0).map(AnnulusCount::Count);
    }
    if s0 == s1 {
        return Ok(AnnulusCount::HolonomyFamily);
    }
    rotative_count(s0, s1).map(AnnulusCount::Count)
}

/// Count for distinct slopes, rotating counterclockwise from `s1` to `s0`.
fn rotative_count(s0: Slope, s1: Slope) -> Result<u128> {
    // Basis (v0, w) with det 1, then coordinates of v1 in it.
    let (x0, y0) = (s0.x(), s0.y());
    let e = x0.extended_gcd(&y0);
    let (wx, wy) = (-e.y * e.gcd, e.x * e.gcd);
    debug_assert_eq!(x0 * wy - y0 * wx, 1);
    let (x1, y1) = (s1.x(), s1.y());
    let mut alpha = x1 * wy - y1 * wx;
    let mut beta = x0 * y1 - y0 * x1;
    if beta < 0 {
        alpha = -alpha;
        beta = -beta;
    }
    // Twist fixing v0 so that alpha lies in (-beta, 0].
    let k = -Integer::div_ceil(&alpha, &beta);
    let alpha = alpha + k * beta;
    if alpha.is_zero() {
        return Ok(2);
    }
    let s1n = Rational::new(beta, alpha) - Rational::from_integer(1);
    debug_assert!(s1n < Rational::from_integer(-1));
    product_formula(s1n)
}

/// Slope of a torus after rounding its edges: the face slopes summed, minus
/// a correction per corner.
pub fn edge_rounding_slope(
    face_slopes: &[Slope],
    corner_count: u32,
    corner_correction: Rational,
) -> Result<Slope> {
    let mut total = Rational::zero();
    for s in face_slopes {
        total += s
            .to_rational()
            .ok_or_else(|| Error::InvalidSlope(s.to_string()))?;
    }
    total -= corner_correction * Rational::from_integer(i64::from(corner_count));
    Ok(Slope::from_rational(total))
}

/// Ambient slope of `∂(Σ×S¹)_i` once the twisting of the singular fiber has
/// been pushed as far as bypasses allow: the largest integer strictly below
/// the image `q/p` of the meridian of the exceptional solid torus.
pub fn maximize_twisting(f: &FiberData) -> Slope {
    let meridian = f.attaching_map.apply(1, 0);
    let m = Rational::new(meridian.1, meridian.0);
    let floor = m.floor().to_integer();
    let top = if m.is_integer() { floor - 1 } else { floor };
    debug_assert!(top.is_negative() || Rational::from_integer(top) < m);
    Slope::integer(top)
}
