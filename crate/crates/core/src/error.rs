use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a negative rational, got {0}")]
    NonNegativeInput(String),
    #[error("{0} has no continued fraction with all quotients at most -2")]
    StrictModeImpossible(String),
    #[error("invalid continued fraction {0:?}: need a0 <= -1 and a_j <= -2 for j >= 1")]
    InvalidContinuedFraction(Vec<i64>),
    #[error("slope 0/0 is undefined")]
    DegenerateSlope,
    #[error("matrix ({a} {b}; {c} {d}) is not unimodular")]
    NotUnimodular { a: i64, b: i64, c: i64, d: i64 },
    #[error("invalid fiber ({p}, {q}): need p >= 2, q >= 1 and gcd(p, q) = 1")]
    InvalidFiber { p: i64, q: i64 },
    #[error("shifts {0:?} do not sum to zero")]
    BadShift(Vec<i64>),
    #[error("component {0} does not carry a rational coefficient that can be twisted")]
    NotRational(usize),
    #[error("component {0} is not a leaf of the diagram")]
    NotTerminal(usize),
    #[error("Rolfsen twist by k = 0 is not a move")]
    ZeroTwist,
    #[error("component {0} is already integral")]
    IntegerAlready(usize),
    #[error("coefficient {0} of a terminal component is not below -1")]
    ExpansionImpossible(String),
    #[error("diagram still has rational coefficients")]
    NotIntegral,
    #[error("no component with id {0}")]
    UnknownComponent(usize),
    #[error("framing {0} is at least -1, so it has no Legendrian unknot realization")]
    FramingTooLarge(i64),
    #[error("slope {0} is not a valid boundary slope for a solid torus")]
    InvalidSlope(String),
    #[error("slopes {0} and {1} cannot be normalized")]
    NotNormalizable(String, String),
    #[error("boundary slope sums {0} and {1} differ")]
    IncompatibleSlopes(i64, i64),
    #[error(
        "e0 = {e0} > -4: the Legendrian lower bound and the convex upper bound do not match in this \
         regime, so the count is not known"
    )]
    UnsupportedRegime { e0: i64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bounds disagree: lower {lower}, upper {upper}, closed form {closed}")]
    BoundsMismatch {
        lower: u128,
        upper: u128,
        closed: u128,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
