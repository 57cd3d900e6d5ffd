use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::{LinearFormProduct, SparsePoly};
use crate::error::Result;

/// A point `(e^{iθ_1}, ..., e^{iθ_k})` of the compact torus.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusPoint {
    angles: Vec<f64>,
}

impl TorusPoint {
    /// Angles are reduced into `[0, 2π)`.
    pub fn new(angles: Vec<f64>) -> Self {
        TorusPoint {
            angles: angles.into_iter().map(|a| a.rem_euclid(TAU)).collect(),
        }
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn coords(&self) -> Vec<Complex64> {
        self.angles.iter().map(|&a| Complex64::cis(a)).collect()
    }
}

/// Something that can be evaluated on the torus without expanding it.
pub trait TorusFunction: Sync {
    fn nvars(&self) -> usize;

    /// Value at the point with the given angles.
    fn eval_angles(&self, angles: &[f64]) -> Complex64;

    /// Maximum total degree of any monomial.
    fn degree(&self) -> u32;

    /// `Some(d)` if the function is homogeneous of degree `d`.
    fn homogeneous_degree(&self) -> Option<u32>;
}

impl SparsePoly {
    /// Floating evaluation at a torus point.
    ///
    /// Each term contributes `c * cis(<e, θ>)` with the angle sum formed in
    /// `f64`; terms are accumulated in increasing graded-lex order.
    pub fn eval_torus(&self, p: &TorusPoint) -> Result<Complex64> {
        self.check_arity(p.angles.len())?;
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in self.terms() {
            let phase: f64 = m
                .exponents()
                .iter()
                .zip(&p.angles)
                .map(|(&e, &a)| e as f64 * a)
                .sum();
            acc += Complex64::cis(phase) * big_to_f64(c);
        }
        Ok(acc)
    }
}

pub(crate) fn big_to_f64(c: &num_bigint::BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

impl TorusFunction for SparsePoly {
    fn nvars(&self) -> usize {
        self.nvars
    }

    fn eval_angles(&self, angles: &[f64]) -> Complex64 {
        // table of cis(j θ_i) so each term is a product of table entries
        let max = self.max_exponents();
        let table: Vec<Vec<Complex64>> = max
            .iter()
            .zip(angles)
            .map(|(&e, &a)| (0..=e).map(|j| Complex64::cis(j as f64 * a)).collect())
            .collect();
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in self.terms() {
            let mut z = Complex64::new(big_to_f64(c), 0.0);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    z *= table[i][e as usize];
                }
            }
            acc += z;
        }
        acc
    }

    fn degree(&self) -> u32 {
        self.total_degree().unwrap_or(0)
    }

    fn homogeneous_degree(&self) -> Option<u32> {
        SparsePoly::homogeneous_degree(self)
    }
}

impl TorusFunction for LinearFormProduct {
    fn nvars(&self) -> usize {
        LinearFormProduct::nvars(self)
    }

    fn eval_angles(&self, angles: &[f64]) -> Complex64 {
        let z: Vec<Complex64> = angles.iter().map(|&a| Complex64::cis(a)).collect();
        let mut acc = Complex64::new(big_to_f64(self.scalar()), 0.0);
        for form in self.forms() {
            let v: Complex64 = form
                .iter()
                .zip(&z)
                .filter(|(&c, _)| c != 0)
                .map(|(&c, zi)| zi * c as f64)
                .sum();
            acc *= v;
        }
        acc
    }

    fn degree(&self) -> u32 {
        LinearFormProduct::degree(self)
    }

    fn homogeneous_degree(&self) -> Option<u32> {
        (!self.has_zero_factor()).then(|| LinearFormProduct::degree(self))
    }
}

/// `base^exponent`, evaluated as a power of the base's value.
#[derive(Debug, Clone)]
pub struct PolyPower<F> {
    pub base: F,
    pub exponent: u32,
}

impl<F: TorusFunction> TorusFunction for PolyPower<F> {
    fn nvars(&self) -> usize {
        self.base.nvars()
    }

    fn eval_angles(&self, angles: &[f64]) -> Complex64 {
        self.base.eval_angles(angles).powu(self.exponent)
    }

    fn degree(&self) -> u32 {
        self.base.degree() * self.exponent
    }

    fn homogeneous_degree(&self) -> Option<u32> {
        if self.exponent == 0 {
            return Some(0);
        }
        self.base.homogeneous_degree().map(|d| d * self.exponent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn eval_examples() {
        let z1z2 = SparsePoly::monomial(1, &[1, 1]);
        let v = z1z2.eval_torus(&TorusPoint::new(vec![0.0, 0.0])).unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-15);

        let sum = &SparsePoly::var(2, 0) + &SparsePoly::var(2, 1);
        let v = sum.eval_torus(&TorusPoint::new(vec![0.0, PI])).unwrap();
        assert!(v.norm() < 1e-15);
    }

    #[test]
    fn table_and_phase_evaluation_agree() {
        let f = SparsePoly::from_terms(2, [(vec![3, 1], 18), (vec![2, 2], 45), (vec![1, 3], 18)])
            .unwrap();
        let p = TorusPoint::new(vec![0.3, 1.7]);
        let a = f.eval_torus(&p).unwrap();
        let b = f.eval_angles(p.angles());
        assert!((a - b).norm() < 1e-12 * a.norm().max(1.0));
    }

    #[test]
    fn factored_and_expanded_agree() {
        let prod = LinearFormProduct::new(2, vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]])
            .unwrap();
        let p = TorusPoint::new(vec![0.0, PI / 2.0]);
        let a = prod.eval_angles(p.angles());
        let b = prod.expand().eval_torus(&p).unwrap();
        assert!((a - b).norm() < 1e-12);
        assert_eq!(TorusFunction::homogeneous_degree(&prod), Some(4));
    }
}
