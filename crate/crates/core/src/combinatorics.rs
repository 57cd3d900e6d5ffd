//! Partitions, compositions and the dimension arithmetic behind every count.
//!
//! Partitions keep their trailing zeros: a length-`k` partition and a
//! length-`2k` partition with the same nonzero parts are different values.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Complex Grassmannians and Chern classes, or oriented real Grassmannians
/// and Euler/Pontryagin classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Complex,
    Real,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Complex => "complex",
            Regime::Real => "real",
        })
    }
}

impl std::str::FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complex" => Ok(Regime::Complex),
            "real" => Ok(Regime::Real),
            other => Err(Error::InvalidParameter(format!("unknown regime {other:?}"))),
        }
    }
}

/// A weakly decreasing sequence of non-negative integers of fixed length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// The constant partition `(m, ..., m)` of length `len`.
    pub fn constant(m: u32, len: usize) -> Self {
        Partition(vec![m; len])
    }

    /// The staircase `(len-1, ..., 1, 0)`.
    pub fn staircase(len: usize) -> Self {
        Partition((0..len as u32).rev().collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// `2β`: every part doubled.
    pub fn doubled(&self) -> Self {
        Partition(self.0.iter().map(|&p| 2 * p).collect())
    }

    /// `β(2)`: every part repeated twice, giving a partition of twice the length.
    pub fn repeated(&self) -> Self {
        Partition(self.0.iter().flat_map(|&p| [p, p]).collect())
    }

    /// Adds `c` to every part.
    pub fn shifted(&self, c: u32) -> Self {
        Partition(self.0.iter().map(|&p| p + c).collect())
    }

    /// Enumerates all partitions of `size` with exactly `len` parts (zeros
    /// allowed), in decreasing lexicographic order.
    pub fn all_of_size(size: u32, len: usize) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if len == 0 {
                if rest == 0 {
                    out.push(Partition(cur.clone()));
                }
                return;
            }
            // the remaining `len` parts are each at most `max`
            if (rest as u64) > (max as u64) * (len as u64) {
                return;
            }
            for p in (0..=max.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, len - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, len, &mut Vec::with_capacity(len), &mut out);
        out
    }

    /// Enumerates all partitions with `len` parts each at most `m`.
    pub fn all_in_rectangle(len: usize, m: u32) -> Vec<Partition> {
        let max_size = m * len as u32;
        (0..=max_size)
            .flat_map(|s| Partition::all_of_size(s, len))
            .filter(|p| p.first() <= m)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = trimmed
            .split(',')
            .map(|p| p.trim())
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<u32>()
                    .map_err(|e| Error::InvalidParameter(format!("partition part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A `k`-tuple of non-negative integers with a fixed sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// All `k`-tuples of non-negative integers summing to `d`.
///
/// Order is graded lexicographic, which for a fixed total is decreasing
/// lexicographic: `(d,0,..,0)` first and `(0,..,0,d)` last.
pub fn compositions(d: u32, k: usize) -> Vec<Composition> {
    fn rec(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if slots == 1 {
            cur.push(rest);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for p in (0..=rest).rev() {
            cur.push(p);
            rec(rest - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if d == 0 {
            out.push(Composition(Vec::new()));
        }
        return out;
    }
    rec(d, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Parity type of a `2k`-partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionParity {
    /// `α = 2β(2)`
    Even(Partition),
    /// `α = 2β(2) + 1`
    Odd(Partition),
    Neither,
}

impl PartitionParity {
    /// The length-`k` exponent profile `(α_1, α_3, ..., α_{2k-1})`, i.e. `2β`
    /// or `2β + 1`.
    pub fn profile(&self) -> Option<Partition> {
        match self {
            PartitionParity::Even(b) => Some(b.doubled()),
            PartitionParity::Odd(b) => Some(b.doubled().shifted(1)),
            PartitionParity::Neither => None,
        }
    }
}

pub fn classify_partition(alpha: &Partition) -> Result<PartitionParity> {
    let parts = alpha.parts();
    if parts.len() % 2 != 0 {
        return Err(Error::InvalidLength {
            found: parts.len(),
            reason: "expected a 2k-partition",
        });
    }
    if parts.chunks(2).any(|c| c[0] != c[1]) {
        return Ok(PartitionParity::Neither);
    }
    let profile: Vec<u32> = parts.iter().step_by(2).copied().collect();
    if profile.iter().all(|p| p % 2 == 0) {
        Ok(PartitionParity::Even(Partition(
            profile.iter().map(|p| p / 2).collect(),
        )))
    } else if profile.iter().all(|p| p % 2 == 1) {
        Ok(PartitionParity::Odd(Partition(
            profile.iter().map(|p| p / 2).collect(),
        )))
    } else {
        Ok(PartitionParity::Neither)
    }
}

/// The `m`-complement: `α_i + β_{k+1-i} = m`.
pub fn complement(alpha: &Partition, m: u32, k: usize) -> Result<Partition> {
    if alpha.len() != k {
        return Err(Error::InvalidLength {
            found: alpha.len(),
            reason: "partition length must equal k",
        });
    }
    if alpha.first() > m {
        return Err(Error::NotInRectangle {
            partition: alpha.parts().to_vec(),
            m,
        });
    }
    Ok(Partition(alpha.parts().iter().rev().map(|&a| m - a).collect()))
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn catalan(n: u32) -> BigUint {
    binomial(2 * n as u64, n as u64) / (n as u64 + 1)
}

/// `n!! = n (n-2) (n-4) ...`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    let mut i = n;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    acc
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Whether the zero-dimensional condition on planes can be met for `(d, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Feasibility {
    pub d: u32,
    /// Rank parameter as given: `k` for complex, the half-rank `k` for real.
    pub k: u32,
    pub regime: Regime,
    /// Rank of `Sym^d` of the tautological bundle: `binom(d+r-1, r-1)` with
    /// `r = k` (complex) or `r = 2k` (real).
    pub sections: u64,
    pub m: Option<u64>,
    pub odd_degree: bool,
}

impl Feasibility {
    /// Rank of the Grassmannian's tautological bundle: `k` or `2k`.
    pub fn rank(&self) -> u32 {
        match self.regime {
            Regime::Complex => self.k,
            Regime::Real => 2 * self.k,
        }
    }

    /// Complex counts need only the divisibility; real counts also need odd `d`.
    pub fn is_feasible(&self) -> bool {
        match self.regime {
            Regime::Complex => self.m.is_some(),
            Regime::Real => self.m.is_some() && self.odd_degree,
        }
    }
}

pub fn feasibility(d: u32, k: u32, regime: Regime) -> Result<Feasibility> {
    if d == 0 || k == 0 {
        return Err(Error::InvalidParameter(format!(
            "feasibility needs d >= 1 and k >= 1, got d={d}, k={k}"
        )));
    }
    let rank = match regime {
        Regime::Complex => k as u64,
        Regime::Real => 2 * k as u64,
    };
    let sections = binomial(d as u64 + rank - 1, rank - 1)
        .to_u64()
        .ok_or_else(|| Error::InvalidParameter(format!("binomial overflow for d={d}, k={k}")))?;
    let (m, rem) = sections.div_rem(&rank);
    Ok(Feasibility {
        d,
        k,
        regime,
        sections,
        m: (rem == 0).then_some(m),
        odd_degree: d % 2 == 1,
    })
}

pub(crate) fn to_bigint(u: BigUint) -> BigInt {
    BigInt::from(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn compositions_examples() {
        let c: Vec<Vec<u32>> = compositions(1, 2).iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(c, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(compositions(3, 4).len(), 20);
        let c: Vec<Vec<u32>> = compositions(0, 3).iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(c, vec![vec![0, 0, 0]]);
    }

    #[test]
    fn compositions_are_in_decreasing_lex_order() {
        let c = compositions(4, 3);
        assert!(c.windows(2).all(|w| w[0].parts() > w[1].parts()));
        assert!(c.iter().all(|c| c.total() == 4));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_partition(&p(&[4, 4, 2, 2])).unwrap(),
            PartitionParity::Even(p(&[2, 1]))
        );
        assert_eq!(
            classify_partition(&p(&[5, 5, 3, 3])).unwrap(),
            PartitionParity::Odd(p(&[2, 1]))
        );
        assert_eq!(
            classify_partition(&p(&[3, 2, 1, 0])).unwrap(),
            PartitionParity::Neither
        );
        assert_eq!(
            classify_partition(&p(&[3, 3, 0, 0])).unwrap(),
            PartitionParity::Neither
        );
        assert!(matches!(
            classify_partition(&p(&[3, 2, 1])),
            Err(Error::InvalidLength { .. })
        ));
    }

    #[test]
    fn profile_of_parities() {
        assert_eq!(
            classify_partition(&p(&[5, 5, 3, 3])).unwrap().profile(),
            Some(p(&[5, 3]))
        );
        assert_eq!(
            classify_partition(&p(&[4, 4, 2, 2])).unwrap().profile(),
            Some(p(&[4, 2]))
        );
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&p(&[2, 2, 0, 0]), 2, 4).unwrap(), p(&[2, 2, 0, 0]));
        assert_eq!(complement(&p(&[3, 1]), 3, 2).unwrap(), p(&[2, 0]));
        assert_eq!(complement(&p(&[0, 0]), 5, 2).unwrap(), p(&[5, 5]));
        assert!(matches!(
            complement(&p(&[4, 1]), 3, 2),
            Err(Error::NotInRectangle { .. })
        ));
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(0), BigUint::from(1u32));
        assert_eq!(catalan(3), BigUint::from(5u32));
        assert_eq!(catalan(5), BigUint::from(42u32));
    }

    #[test]
    fn feasibility_examples() {
        let f = feasibility(3, 4, Regime::Complex).unwrap();
        assert_eq!(f.m, Some(5));
        let f = feasibility(5, 2, Regime::Real).unwrap();
        assert_eq!(f.m, Some(14));
        assert!(f.is_feasible());
        let f = feasibility(3, 3, Regime::Real).unwrap();
        assert_eq!(f.sections, 56);
        assert_eq!(f.m, None);
        assert!(!f.is_feasible());
        // divisible but even degree
        let f = feasibility(6, 2, Regime::Real).unwrap();
        assert_eq!(f.sections, 84);
        assert_eq!(f.m, Some(21));
        assert!(!f.is_feasible());
    }

    #[test]
    fn partitions_of_size() {
        let all = Partition::all_of_size(4, 2);
        assert_eq!(all, vec![p(&[4, 0]), p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(Partition::all_in_rectangle(2, 2).len(), 6);
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(7), BigUint::from(105u32));
        assert_eq!(double_factorial(1), BigUint::from(1u32));
        assert_eq!(double_factorial(0), BigUint::from(1u32));
    }

    #[test]
    fn partition_parse() {
        assert_eq!("(5,5,3,3)".parse::<Partition>().unwrap(), p(&[5, 5, 3, 3]));
        assert_eq!("2, 1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert!("1,2".parse::<Partition>().is_err());
    }
}
