use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::{Monomial, SparsePoly};
use crate::error::{Error, Result};

/// Multiplication schedule for long products. Both produce identical results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProductOrder {
    /// Divide and conquer; the two halves run on separate rayon tasks.
    #[default]
    Balanced,
    /// Left to right, one linear form at a time.
    Sequential,
}

/// Leaves of the balanced tree multiply this many forms left to right.
const LEAF_FORMS: usize = 8;

/// An unexpanded product `scalar * prod_j (c_j1 z_1 + ... + c_jk z_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFormProduct {
    nvars: usize,
    scalar: BigInt,
    forms: Vec<Vec<i64>>,
}

impl LinearFormProduct {
    pub fn new(nvars: usize, forms: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(bad) = forms.iter().find(|f| f.len() != nvars) {
            return Err(Error::ArityMismatch {
                expected: nvars,
                found: bad.len(),
            });
        }
        Ok(LinearFormProduct {
            nvars,
            scalar: BigInt::one(),
            forms,
        })
    }

    pub fn with_scalar(mut self, scalar: BigInt) -> Self {
        self.scalar = scalar;
        self
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn scalar(&self) -> &BigInt {
        &self.scalar
    }

    pub fn forms(&self) -> &[Vec<i64>] {
        &self.forms
    }

    /// Total degree, counting only forms that are not identically zero.
    pub fn degree(&self) -> u32 {
        self.forms.iter().filter(|f| f.iter().any(|&c| c != 0)).count() as u32
    }

    pub fn has_zero_factor(&self) -> bool {
        self.scalar.is_zero() || self.forms.iter().any(|f| f.iter().all(|&c| c == 0))
    }

    pub fn expand(&self) -> SparsePoly {
        self.expand_with(ProductOrder::default())
    }

    pub fn expand_with(&self, order: ProductOrder) -> SparsePoly {
        if self.has_zero_factor() {
            return SparsePoly::zero(self.nvars);
        }
        let prod = match order {
            ProductOrder::Sequential => sequential(self.nvars, &self.forms),
            ProductOrder::Balanced => balanced(self.nvars, &self.forms),
        };
        prod.scale(&self.scalar)
    }
}

/// Exact product of the linear forms `sum_i coeffs[j][i] z_i`; the empty
/// product is 1.
pub fn product_of_linear_forms(nvars: usize, coeffs: &[Vec<i64>]) -> Result<SparsePoly> {
    Ok(LinearFormProduct::new(nvars, coeffs.to_vec())?.expand())
}

fn sequential(nvars: usize, forms: &[Vec<i64>]) -> SparsePoly {
    forms
        .iter()
        .fold(SparsePoly::one(nvars), |acc, f| acc.mul_linear(f))
}

fn balanced(nvars: usize, forms: &[Vec<i64>]) -> SparsePoly {
    if forms.len() <= LEAF_FORMS {
        return sequential(nvars, forms);
    }
    let (left, right) = forms.split_at(forms.len() / 2);
    let (a, b) = rayon::join(|| balanced(nvars, left), || balanced(nvars, right));
    &a * &b
}

impl SparsePoly {
    /// Multiplies by `sum_i form[i] z_i`.
    pub fn mul_linear(&self, form: &[i64]) -> SparsePoly {
        assert_eq!(form.len(), self.nvars, "linear form arity mismatch");
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        acc.reserve(self.len() * 2);
        for (m, c) in &self.terms {
            for (i, &a) in form.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let mut e = m.clone();
                e.0[i] += 1;
                *acc.entry(e).or_default() += c * a;
            }
        }
        let terms: BTreeMap<Monomial, BigInt> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        SparsePoly::from_map(self.nvars, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_variable_examples() {
        let p = product_of_linear_forms(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(p, SparsePoly::monomial(1, &[1, 1]));

        // 9 z1 z2 (2 z1 + z2)(z1 + 2 z2), expanded by hand
        let p = product_of_linear_forms(2, &[vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]])
            .unwrap();
        let expected =
            SparsePoly::from_terms(2, [(vec![3, 1], 18), (vec![2, 2], 45), (vec![1, 3], 18)])
                .unwrap();
        assert_eq!(p, expected);
        assert_eq!(p.coefficient_at(&[2, 2]).unwrap(), BigInt::from(45));

        assert_eq!(product_of_linear_forms(2, &[]).unwrap(), SparsePoly::one(2));
    }

    #[test]
    fn arity_is_checked() {
        assert!(matches!(
            product_of_linear_forms(2, &[vec![1, 0, 0]]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn schedules_agree() {
        let forms: Vec<Vec<i64>> = crate::combinatorics::compositions(4, 3)
            .iter()
            .map(|c| c.parts().iter().map(|&p| p as i64).collect())
            .collect();
        let prod = LinearFormProduct::new(3, forms).unwrap();
        assert_eq!(
            prod.expand_with(ProductOrder::Balanced),
            prod.expand_with(ProductOrder::Sequential)
        );
    }

    #[test]
    fn zero_factor_gives_zero() {
        let prod = LinearFormProduct::new(2, vec![vec![1, 1], vec![0, 0]]).unwrap();
        assert!(prod.expand().is_zero());
        assert_eq!(prod.degree(), 1);
    }
}
