use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::{Monomial, SparsePoly};
use crate::error::Result;

/// Products with fewer term pairs than this stay on the calling thread.
const PARALLEL_PAIRS: usize = 1 << 16;

impl SparsePoly {
    pub fn try_add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_arity(other.nvars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_arity(other.nvars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_arity(other.nvars)?;
        if self.is_zero() || other.is_zero() {
            return Ok(SparsePoly::zero(self.nvars));
        }
        // iterate the longer operand in the outer loop so chunks stay balanced
        let (outer, inner) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let outer_terms: Vec<(&Monomial, &BigInt)> = outer.terms.iter().collect();
        let inner_terms: Vec<(&Monomial, &BigInt)> = inner.terms.iter().collect();

        let acc = if outer_terms.len() * inner_terms.len() < PARALLEL_PAIRS {
            accumulate(&outer_terms, &inner_terms)
        } else {
            let chunk = outer_terms.len().div_ceil(rayon::current_num_threads() * 4).max(1);
            outer_terms
                .par_chunks(chunk)
                .map(|part| accumulate(part, &inner_terms))
                .reduce(FxHashMap::default, merge)
        };

        let terms: BTreeMap<Monomial, BigInt> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(SparsePoly::from_map(self.nvars, terms))
    }

    /// `self^n` by repeated squaring; `pow(0)` is 1.
    pub fn pow(&self, n: u32) -> SparsePoly {
        let mut result = SparsePoly::one(self.nvars);
        if n == 0 {
            return result;
        }
        let mut base = self.clone();
        let mut e = n;
        loop {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = &base * &base;
        }
        result
    }

    pub fn scale(&self, c: &BigInt) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        if c.is_one() {
            return self.clone();
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        SparsePoly::from_map(self.nvars, terms)
    }
}

fn accumulate(
    outer: &[(&Monomial, &BigInt)],
    inner: &[(&Monomial, &BigInt)],
) -> FxHashMap<Monomial, BigInt> {
    let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
    acc.reserve(outer.len() + inner.len());
    for (ma, ca) in outer {
        for (mb, cb) in inner {
            let prod = *ca * *cb;
            *acc.entry(ma.mul(mb)).or_default() += prod;
        }
    }
    acc
}

fn merge(
    mut a: FxHashMap<Monomial, BigInt>,
    mut b: FxHashMap<Monomial, BigInt>,
) -> FxHashMap<Monomial, BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    for (m, c) in b {
        *a.entry(m).or_default() += c;
    }
    a
}

// Operator forms panic on arity mismatch; use the `try_*` methods to get an
// error instead.

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_add(rhs).expect("polynomial arity mismatch")
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&BigInt::from(-1))
    }
}
