//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is graded
//! lexicographic (total degree first, then `x1 > x2 > ... > xk`). The leading
//! term is therefore the last entry of the map. No stored coefficient is zero.

mod arith;
mod divide;
mod linear;
mod torus;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub use linear::{product_of_linear_forms, LinearFormProduct, ProductOrder};
pub use torus::{PolyPower, TorusFunction, TorusPoint};

pub type Exponents = SmallVec<[u32; 6]>;

/// An exponent vector of fixed length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Exponents);

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` if some exponent would go negative.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Exponents>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c.into());
        p
    }

    /// The variable `x_{i+1}` (zero-based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(1, &e)
    }

    /// `c * x^e`, with the arity taken from `e`.
    pub fn monomial(c: impl Into<BigInt>, exps: &[u32]) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(Monomial::new(exps), c.into());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials and dropping zeros.
    pub fn from_terms<I, C>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    found: e.len(),
                });
            }
            p.add_term(Monomial::new(&e), c.into());
        }
        Ok(p)
    }

    pub(crate) fn from_map(nvars: usize, terms: BTreeMap<Monomial, BigInt>) -> Self {
        debug_assert!(terms.iter().all(|(m, c)| m.len() == nvars && !c.is_zero()));
        SparsePoly { nvars, terms }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    /// Smallest total degree of any term.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// `Some(d)` if every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.total_degree()?;
        (self.low_degree() == Some(d)).then_some(d)
    }

    /// Largest exponent of each variable over all terms.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.nvars];
        for m in self.terms.keys() {
            for (o, e) in out.iter_mut().zip(m.exponents()) {
                *o = (*o).max(*e);
            }
        }
        out
    }

    pub fn coefficient_at(&self, exps: &[u32]) -> Result<BigInt> {
        if exps.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: exps.len(),
            });
        }
        Ok(self.coefficient(&Monomial::new(exps)))
    }

    pub(crate) fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub(crate) fn coefficient_ref(&self, m: &Monomial) -> Option<&BigInt> {
        self.terms.get(m)
    }

    /// Sum of all coefficients, i.e. the value at `(1, ..., 1)`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Applies `x_i -> x_i^2` to every variable.
    pub fn square_variables(&self) -> SparsePoly {
        self.map_monomials(|m| Monomial(m.0.iter().map(|e| 2 * e).collect()))
    }

    /// Multiplies by the monomial `x^e`.
    pub fn shift(&self, exps: &[u32]) -> Result<SparsePoly> {
        self.check_arity(exps.len())?;
        let s = Monomial::new(exps);
        Ok(self.map_monomials(|m| m.mul(&s)))
    }

    /// Permutes variables: variable `i` becomes variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<SparsePoly> {
        self.check_arity(perm.len())?;
        Ok(self.map_monomials(|m| {
            let mut e = SmallVec::from_elem(0, m.len());
            for (i, &p) in perm.iter().enumerate() {
                e[p] = m.0[i];
            }
            Monomial(e)
        }))
    }

    /// Invariance under every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(m, c)| {
                let mut e = m.0.clone();
                e.swap(i, i + 1);
                self.terms.get(&Monomial(e)) == Some(c)
            })
        })
    }

    /// Each monomial has all exponents even or all exponents odd.
    pub fn first_mixed_parity_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().find(|m| {
            let first = m.0.first().map_or(0, |e| e % 2);
            m.0.iter().any(|e| e % 2 != first)
        })
    }

    fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    pub(crate) fn check_arity(&self, found: usize) -> Result<()> {
        if found == self.nvars {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.nvars,
                found,
            })
        }
    }

    /// Parses the canonical text form produced by `Display`.
    pub fn parse(text: &str, nvars: usize) -> Result<SparsePoly> {
        let text = text.trim();
        if text == "0" {
            return Ok(SparsePoly::zero(nvars));
        }
        let mut out = SparsePoly::zero(nvars);
        for term in text.split(" + ") {
            let (coeff, mono) = term
                .split_once(" * ")
                .ok_or_else(|| Error::Parse(format!("term {term:?} lacks ' * '")))?;
            let c: BigInt = coeff
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("coefficient {coeff:?}: {e}")))?;
            let mut exps = vec![0u32; nvars];
            for factor in mono.split_whitespace() {
                let (var, exp) = factor
                    .strip_prefix('x')
                    .and_then(|f| f.split_once('^'))
                    .ok_or_else(|| Error::Parse(format!("factor {factor:?}")))?;
                let i: usize = var
                    .parse()
                    .map_err(|e| Error::Parse(format!("variable index {var:?}: {e}")))?;
                if i == 0 || i > nvars {
                    return Err(Error::Parse(format!("variable x{i} out of range")));
                }
                exps[i - 1] = exp
                    .parse()
                    .map_err(|e| Error::Parse(format!("exponent {exp:?}: {e}")))?;
            }
            out.add_term(Monomial::new(&exps), c);
        }
        Ok(out)
    }
}

/// Canonical text form: terms in decreasing graded-lex order joined by
/// `" + "`, each written `coeff * x1^e1 ... xk^ek` with every variable listed.
/// The zero polynomial is `0`.
impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c} *")?;
            for (i, e) in m.exponents().iter().enumerate() {
                write!(f, " x{}^{e}", i + 1)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let a = Monomial::new(&[2, 0]);
        let b = Monomial::new(&[1, 1]);
        let c = Monomial::new(&[0, 3]);
        assert!(a > b);
        assert!(c > a);
    }

    #[test]
    fn coefficient_lookup() {
        let f = SparsePoly::from_terms(2, [(vec![2, 0], 1), (vec![0, 2], -1)]).unwrap();
        assert_eq!(f.coefficient_at(&[2, 0]).unwrap(), BigInt::from(1));
        assert_eq!(f.coefficient_at(&[1, 1]).unwrap(), BigInt::from(0));
        assert!(matches!(
            f.coefficient_at(&[1, 1, 0]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn text_form_round_trip() {
        let f = SparsePoly::from_terms(2, [(vec![3, 1], 18), (vec![2, 2], -45), (vec![0, 0], 7)])
            .unwrap();
        let text = f.to_string();
        assert_eq!(text, "18 * x1^3 x2^1 + -45 * x1^2 x2^2 + 7 * x1^0 x2^0");
        assert_eq!(SparsePoly::parse(&text, 2).unwrap(), f);
        assert_eq!(SparsePoly::zero(3).to_string(), "0");
        assert_eq!(SparsePoly::parse("0", 3).unwrap(), SparsePoly::zero(3));
    }

    #[test]
    fn symmetry_and_parity() {
        let f = SparsePoly::from_terms(2, [(vec![2, 1], 1), (vec![1, 2], 1)]).unwrap();
        assert!(f.is_symmetric());
        assert!(f.first_mixed_parity_monomial().is_some());
        let g = SparsePoly::from_terms(2, [(vec![2, 1], 1)]).unwrap();
        assert!(!g.is_symmetric());
        let h = SparsePoly::from_terms(2, [(vec![3, 1], 1), (vec![2, 0], 1)]).unwrap();
        assert!(h.first_mixed_parity_monomial().is_none());
    }
}
