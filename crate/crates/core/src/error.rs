use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("exact division failed: nonzero remainder")]
    NotDivisible,

    #[error("polynomial is not a perfect square")]
    NotAPerfectSquare,

    #[error("invalid length {found}: {reason}")]
    InvalidLength { found: usize, reason: &'static str },

    #[error("partition {0:?} is not weakly decreasing")]
    NotAPartition(Vec<u32>),

    #[error("partition {partition:?} does not fit the rectangle with width {m}")]
    NotInRectangle { partition: Vec<u32>, m: u32 },

    #[error("exponents {0:?} are not strictly decreasing; the alternant vanishes")]
    DegenerateAlternant(Vec<u32>),

    #[error("2k-partition {0:?} is neither even nor odd")]
    NotEvenOrOdd(Vec<u32>),

    #[error("polynomial is not in the Euler-Pontryagin ring (mixed-parity monomial {0:?})")]
    NotEulerPontryagin(Vec<u32>),

    #[error("polynomial is not symmetric under permutations of its variables")]
    NotSymmetric,

    #[error("degree {0} is even; real Euler counts are only defined for odd degree")]
    EvenDegree(u32),

    #[error("quadrature grid {grid} is below the exactness threshold {required}")]
    GridTooCoarse { grid: usize, required: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
