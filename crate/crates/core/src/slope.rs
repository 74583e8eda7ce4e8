//! Exact slopes, the SL(2, Z) action on them, Farey relations and negative
//! continued fractions.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduced rational with positive denominator.
pub type Rational = num_rational::Ratio<i64>;

/// Parse `"a/b"` or `"a"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: i64 = n
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let d: i64 = d
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if d == 0 {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// Extended rational `y/x` including infinity, stored as a primitive vector
/// `(x, y)` with `x >= 0`. Infinity is `(0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slope {
    y: i64,
    x: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { y: 1, x: 0 };

    /// Slope of the line through the vector `(x, y)`.
    pub fn new(y: i64, x: i64) -> Result<Slope> {
        if x == 0 && y == 0 {
            return Err(Error::DegenerateSlope);
        }
        let g = y.gcd(&x);
        let (mut y, mut x) = (y / g, x / g);
        if x < 0 || (x == 0 && y < 0) {
            y = -y;
            x = -x;
        }
        Ok(Slope { y, x })
    }

    pub fn integer(n: i64) -> Slope {
        Slope { y: n, x: 1 }
    }

    pub fn from_rational(r: Rational) -> Slope {
        Slope {
            y: *r.numer(),
            x: *r.denom(),
        }
    }

    pub fn y(&self) -> i64 {
        self.y
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn is_infinite(&self) -> bool {
        self.x == 0
    }

    /// `None` for infinity.
    pub fn to_rational(&self) -> Option<Rational> {
        (self.x != 0).then(|| Rational::new(self.y, self.x))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x, self.y) {
            (0, _) => write!(f, "inf"),
            (1, y) => write!(f, "{y}"),
            (x, y) => write!(f, "{y}/{x}"),
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Slope> {
        match s.trim() {
            "inf" | "∞" => Ok(Slope::INFINITY),
            t => parse_rational(t).map(Slope::from_rational),
        }
    }
}

/// `true` iff the two slopes span a basis of Z², i.e. are joined by a Farey edge.
pub fn farey_neighbors(s: Slope, t: Slope) -> bool {
    let det = i128::from(s.y) * i128::from(t.x) - i128::from(t.y) * i128::from(s.x);
    det.abs() == 1
}

/// Integer matrix `(a b; c d)` with determinant ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnimodularMap {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl UnimodularMap {
    pub const IDENTITY: UnimodularMap = UnimodularMap {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<UnimodularMap> {
        let m = UnimodularMap { a, b, c, d };
        match m.det() {
            1 | -1 => Ok(m),
            _ => Err(Error::NotUnimodular { a, b, c, d }),
        }
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, o: &UnimodularMap) -> UnimodularMap {
        UnimodularMap {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn inverse(&self) -> UnimodularMap {
        let e = self.det();
        UnimodularMap {
            a: e * self.d,
            b: -e * self.b,
            c: -e * self.c,
            d: e * self.a,
        }
    }

    /// Image of the column vector `(x, y)`.
    pub fn apply(&self, x: i64, y: i64) -> (i64, i64) {
        (self.a * x + self.b * y, self.c * x + self.d * y)
    }
}

/// Image of a slope under a unimodular map acting on column vectors `(x, y)`.
pub fn act(m: &UnimodularMap, s: Slope) -> Slope {
    let (x, y) = m.apply(s.x, s.y);
    Slope::new(y, x).expect("unimodular maps send primitive vectors to nonzero vectors")
}

/// `[a0, a1, ..., am]` standing for `a0 - 1/(a1 - 1/(... - 1/am))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NegContinuedFraction {
    coeffs: Vec<i64>,
}

impl NegContinuedFraction {
    /// Checks `a0 <= -1` and `a_j <= -2` for `j >= 1`.
    pub fn new(coeffs: Vec<i64>) -> Result<NegContinuedFraction> {
        let ok = match coeffs.split_first() {
            Some((&a0, rest)) => a0 <= -1 && rest.iter().all(|&a| a <= -2),
            None => false,
        };
        if ok {
            Ok(NegContinuedFraction { coeffs })
        } else {
            Err(Error::InvalidContinuedFraction(coeffs))
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn a0(&self) -> i64 {
        self.coeffs[0]
    }

    /// Coefficients after the first.
    pub fn tail(&self) -> &[i64] {
        &self.coeffs[1..]
    }

    /// Index of the last coefficient.
    pub fn m(&self) -> usize {
        self.coeffs.len() - 1
    }
}

impl fmt::Display for NegContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CfMode {
    /// `a0 = floor(r)`, so `a0 = -1` is allowed.
    Relaxed,
    /// Every quotient at most -2.
    Strict,
}

/// Floor-division expansion. Quotients after the first are automatically at
/// most -2 because every remainder lies strictly below -1.
pub fn neg_cf(r: Rational, mode: CfMode) -> Result<NegContinuedFraction> {
    if !r.is_negative() {
        return Err(Error::NonNegativeInput(r.to_string()));
    }
    let mut coeffs = Vec::new();
    let mut x = r;
    loop {
        let a = x.floor().to_integer();
        coeffs.push(a);
        let frac = x - Rational::from_integer(a);
        if frac.is_zero() {
            break;
        }
        x = -frac.recip();
    }
    if mode == CfMode::Strict && coeffs[0] == -1 {
        return Err(Error::StrictModeImpossible(r.to_string()));
    }
    NegContinuedFraction::new(coeffs)
}

pub fn eval_cf(cf: &NegContinuedFraction) -> Rational {
    let mut it = cf.coeffs.iter().rev();
    let mut x = Rational::from_integer(*it.next().expect("nonempty"));
    for &a in it {
        x = Rational::from_integer(a) - x.recip();
    }
    x
}

/// Convergent sequences of a continued fraction for `-q/p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Convergents {
    pub p: Vec<i64>,
    pub q: Vec<i64>,
    /// `p_{m-1}`.
    pub u: i64,
    /// `q_{m-1}`.
    pub v: i64,
}

/// `p_j = -a_j p_{j-1} - p_{j-2}` from `p_{-2} = -1, p_{-1} = 0`, and the
/// same recursion for `q_j` from `q_{-2} = 0, q_{-1} = 1`. Then `-q_j/p_j`
/// is the value of `[a0..aj]` and `p_j q_{j-1} - p_{j-1} q_j = 1`.
pub fn convergents(cf: &NegContinuedFraction) -> Convergents {
    let (mut p2, mut p1) = (-1i64, 0i64);
    let (mut q2, mut q1) = (0i64, 1i64);
    let mut p = Vec::with_capacity(cf.coeffs.len());
    let mut q = Vec::with_capacity(cf.coeffs.len());
    for &a in &cf.coeffs {
        let pj = -a * p1 - p2;
        let qj = -a * q1 - q2;
        p.push(pj);
        q.push(qj);
        (p2, p1) = (p1, pj);
        (q2, q1) = (q1, qj);
    }
    Convergents { p, q, u: p2, v: q2 }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn neg_cf_examples() {
        assert_eq!(
            neg_cf(r(-1, 2), CfMode::Relaxed).unwrap().coeffs(),
            &[-1, -2]
        );
        assert_eq!(neg_cf(r(-4, 1), CfMode::Relaxed).unwrap().coeffs(), &[-4]);
        assert_eq!(
            neg_cf(r(-3, 5), CfMode::Relaxed).unwrap().coeffs(),
            &[-1, -3, -2]
        );
        assert_eq!(
            neg_cf(r(-5, 3), CfMode::Strict).unwrap().coeffs(),
            &[-2, -3]
        );
        assert_eq!(
            neg_cf(r(-1, 3), CfMode::Relaxed).unwrap().coeffs(),
            &[-1, -2, -2]
        );
    }

    #[test]
    fn neg_cf_errors() {
        assert!(matches!(
            neg_cf(r(0, 1), CfMode::Relaxed),
            Err(Error::NonNegativeInput(_))
        ));
        assert!(matches!(
            neg_cf(r(3, 7), CfMode::Relaxed),
            Err(Error::NonNegativeInput(_))
        ));
        assert!(matches!(
            neg_cf(r(-1, 2), CfMode::Strict),
            Err(Error::StrictModeImpossible(_))
        ));
        assert!(matches!(
            neg_cf(r(-1, 1), CfMode::Strict),
            Err(Error::StrictModeImpossible(_))
        ));
    }

    #[test]
    fn eval_examples() {
        let cf = |v: &[i64]| NegContinuedFraction::new(v.to_vec()).unwrap();
        assert_eq!(eval_cf(&cf(&[-1, -2])), r(-1, 2));
        assert_eq!(eval_cf(&cf(&[-4])), r(-4, 1));
        assert_eq!(eval_cf(&cf(&[-1, -3, -2])), r(-3, 5));
    }

    #[test]
    fn cf_validation() {
        assert!(NegContinuedFraction::new(vec![]).is_err());
        assert!(NegContinuedFraction::new(vec![0]).is_err());
        assert!(NegContinuedFraction::new(vec![-3, -1]).is_err());
        assert!(NegContinuedFraction::new(vec![-1, -2, -5]).is_ok());
    }

    #[test]
    fn convergent_examples() {
        let c = convergents(&neg_cf(r(-1, 2), CfMode::Relaxed).unwrap());
        assert_eq!((c.p, c.q, c.u, c.v), (vec![1, 2], vec![1, 1], 1, 1));

        let c = convergents(&neg_cf(r(-4, 1), CfMode::Relaxed).unwrap());
        assert_eq!((c.p, c.q, c.u, c.v), (vec![1], vec![4], 0, 1));

        let c = convergents(&neg_cf(r(-3, 5), CfMode::Relaxed).unwrap());
        assert_eq!((c.p[2], c.q[2]), (5, 3));
        assert_eq!(5 * c.v - 3 * c.u, 1);
    }

    #[test]
    fn act_examples() {
        let a = UnimodularMap::new(2, -1, 1, 0).unwrap();
        for n in -10..=10 {
            let s = Slope::new(1, n).unwrap();
            assert_eq!(act(&a, s), Slope::new(n, 2 * n - 1).unwrap());
        }
        assert_eq!(act(&a, Slope::INFINITY), Slope::integer(0));
        let s = Slope::new(-5, 7).unwrap();
        assert_eq!(act(&UnimodularMap::IDENTITY, s), s);
    }

    #[test]
    fn farey_examples() {
        assert!(farey_neighbors(Slope::integer(0), Slope::INFINITY));
        assert!(farey_neighbors(
            Slope::integer(-1),
            Slope::new(-1, 2).unwrap()
        ));
        assert!(!farey_neighbors(
            Slope::new(1, 3).unwrap(),
            Slope::integer(3)
        ));
    }

    #[test]
    fn slope_canonical_form() {
        assert_eq!(Slope::new(2, -4).unwrap(), Slope::new(-1, 2).unwrap());
        assert_eq!(Slope::new(-3, 0).unwrap(), Slope::INFINITY);
        assert_eq!(Slope::new(0, 0), Err(Error::DegenerateSlope));
        assert_eq!("inf".parse::<Slope>().unwrap(), Slope::INFINITY);
        assert_eq!("-6/4".parse::<Slope>().unwrap().to_string(), "-3/2");
    }

    #[test]
    fn unimodular_checks() {
        assert!(UnimodularMap::new(2, 0, 0, 1).is_err());
        let m = UnimodularMap::new(5, 3, 3, 2).unwrap();
        assert_eq!(m.compose(&m.inverse()), UnimodularMap::IDENTITY);
    }
}
