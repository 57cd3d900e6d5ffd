//! Alternants, complex and real Schur polynomials, and Schur coefficients.
//!
//! A Schur coefficient `λ_α(f)` of a symmetric `f` is read off exactly as the
//! coefficient of `z^{α+δ}` in `f · V_δ`. The real variant works in the
//! Euler-Pontryagin ring with `V_{2δ}` in place of `V_δ`. The torus quadrature
//! in [`quadrature`] computes the same numbers through the integral and serves
//! as an independent check.

mod quadrature;

use num_bigint::BigInt;
use serde::Serialize;

use crate::combinatorics::{classify_partition, Partition, Regime};
use crate::error::{Error, Result};
use crate::polynomial::{Monomial, SparsePoly};

pub use quadrature::{exactness_grid, numeric_coefficient, numeric_schur_coefficient};

/// A symmetric polynomial standing in for a cohomology class.
///
/// Complex root polynomials are symmetric. Real ones lie in the
/// Euler-Pontryagin ring: every monomial has all exponents even or all odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootPolynomial {
    poly: SparsePoly,
    regime: Regime,
}

impl RootPolynomial {
    pub fn complex(poly: SparsePoly) -> Result<Self> {
        if !poly.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Self::complex_unchecked(poly))
    }

    pub fn real(poly: SparsePoly) -> Result<Self> {
        if let Some(m) = poly.first_mixed_parity_monomial() {
            return Err(Error::NotEulerPontryagin(m.exponents().to_vec()));
        }
        Ok(Self::real_unchecked(poly))
    }

    pub(crate) fn complex_unchecked(poly: SparsePoly) -> Self {
        RootPolynomial {
            poly,
            regime: Regime::Complex,
        }
    }

    pub(crate) fn real_unchecked(poly: SparsePoly) -> Self {
        RootPolynomial {
            poly,
            regime: Regime::Real,
        }
    }

    pub fn poly(&self) -> &SparsePoly {
        &self.poly
    }

    pub fn into_poly(self) -> SparsePoly {
        self.poly
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchurCoefficient {
    pub partition: Partition,
    #[serde(serialize_with = "crate::serialize_decimal")]
    pub value: BigInt,
    /// False in the real regime, where the value is defined only up to sign.
    pub sign_certain: bool,
}

/// All permutations of `0..k` with their signs, in lexicographic order.
pub(crate) fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i32)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i32)>) {
        let k = used.len();
        if prefix.len() == k {
            let inversions = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| prefix[i] > prefix[j])
                .count();
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

fn check_strictly_decreasing(gamma: &[u32]) -> Result<()> {
    if gamma.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::DegenerateAlternant(gamma.to_vec()));
    }
    Ok(())
}

/// The alternant `V_γ = sum_τ sign(τ) z_{τ(1)}^{γ_1} ... z_{τ(k)}^{γ_k}`.
pub fn vandermonde(gamma: &[u32]) -> Result<SparsePoly> {
    check_strictly_decreasing(gamma)?;
    let k = gamma.len();
    let mut out = SparsePoly::zero(k);
    for (perm, sign) in signed_permutations(k) {
        let mut e = vec![0u32; k];
        for (i, &p) in perm.iter().enumerate() {
            e[p] = gamma[i];
        }
        out.add_term(Monomial::new(&e), BigInt::from(sign));
    }
    Ok(out)
}

/// `δ = (k-1, ..., 1, 0)` as exponents.
fn delta(k: usize) -> Vec<u32> {
    (0..k as u32).rev().collect()
}

fn two_delta(k: usize) -> Vec<u32> {
    delta(k).into_iter().map(|d| 2 * d).collect()
}

fn add(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Coefficient of `x^target` in `f · V_base`, without forming the product.
fn alternant_coefficient(f: &SparsePoly, target: &[u32], base: &[u32]) -> BigInt {
    let k = base.len();
    let mut acc = BigInt::default();
    let mut e = vec![0u32; k];
    'perm: for (perm, sign) in signed_permutations(k) {
        for (i, &p) in perm.iter().enumerate() {
            match target[p].checked_sub(base[i]) {
                Some(v) => e[p] = v,
                None => continue 'perm,
            }
        }
        if let Some(c) = f.coefficient_ref(&Monomial::new(&e)) {
            if sign > 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
    }
    acc
}

/// `s_α = V_{α+δ} / V_δ` in `k = len(α)` variables.
pub fn schur_polynomial(alpha: &Partition) -> Result<RootPolynomial> {
    let k = alpha.len();
    let d = delta(k);
    let numerator = vandermonde(&add(alpha.parts(), &d))?;
    let denominator = vandermonde(&d)?;
    Ok(RootPolynomial::complex_unchecked(
        numerator.exact_div(&denominator)?,
    ))
}

fn check_length(alpha: &Partition, expected: usize) -> Result<()> {
    if alpha.len() != expected {
        return Err(Error::InvalidLength {
            found: alpha.len(),
            reason: "partition length does not match the number of variables",
        });
    }
    Ok(())
}

/// `λ_α(f)`: the coefficient of `s_α` in the Schur expansion of `f`.
pub fn schur_coefficient(f: &RootPolynomial, alpha: &Partition) -> Result<SchurCoefficient> {
    if f.regime != Regime::Complex {
        return Err(Error::InvalidParameter(
            "complex Schur coefficient of a real root polynomial".into(),
        ));
    }
    let k = f.nvars();
    check_length(alpha, k)?;
    let d = delta(k);
    Ok(SchurCoefficient {
        partition: alpha.clone(),
        value: alternant_coefficient(&f.poly, &add(alpha.parts(), &d), &d),
        sign_certain: true,
    })
}

/// Exponent profile of an even or odd `2k`-partition.
fn real_profile(alpha: &Partition) -> Result<Partition> {
    classify_partition(alpha)?
        .profile()
        .ok_or_else(|| Error::NotEvenOrOdd(alpha.parts().to_vec()))
}

/// `s_{α,R} = V_{p+2δ} / V_{2δ}` where `p` is the length-`k` profile of the
/// `2k`-partition `α`.
pub fn real_schur_polynomial(alpha: &Partition) -> Result<RootPolynomial> {
    let profile = real_profile(alpha)?;
    let k = profile.len();
    let base = two_delta(k);
    let numerator = vandermonde(&add(profile.parts(), &base))?;
    let denominator = vandermonde(&base)?;
    Ok(RootPolynomial::real_unchecked(
        numerator.exact_div(&denominator)?,
    ))
}

/// Real Schur coefficient, up to sign: the coefficient of `x^{p+2δ}` in
/// `f · V_{2δ}`.
pub fn real_schur_coefficient(f: &RootPolynomial, alpha: &Partition) -> Result<SchurCoefficient> {
    if let Some(m) = f.poly.first_mixed_parity_monomial() {
        return Err(Error::NotEulerPontryagin(m.exponents().to_vec()));
    }
    let k = f.nvars();
    check_length(alpha, 2 * k)?;
    let profile = real_profile(alpha)?;
    let base = two_delta(k);
    Ok(SchurCoefficient {
        partition: alpha.clone(),
        value: alternant_coefficient(&f.poly, &add(profile.parts(), &base), &base),
        sign_certain: false,
    })
}

/// `λ_{(m,...,m)}(s_α s_β)`: 1 for `m`-complementary pairs, 0 otherwise.
pub fn duality_pairing(alpha: &Partition, beta: &Partition, m: u32) -> Result<BigInt> {
    let k = alpha.len();
    check_length(beta, k)?;
    for p in [alpha, beta] {
        if p.first() > m {
            return Err(Error::NotInRectangle {
                partition: p.parts().to_vec(),
                m,
            });
        }
    }
    let product = schur_polynomial(alpha)?.poly() * schur_polynomial(beta)?.poly();
    let coeff = schur_coefficient(
        &RootPolynomial::complex_unchecked(product),
        &Partition::constant(m, k),
    )?;
    Ok(coeff.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(nvars: usize, terms: &[(&[u32], i64)]) -> SparsePoly {
        SparsePoly::from_terms(nvars, terms.iter().map(|(e, c)| (e.to_vec(), *c))).unwrap()
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde(&[1, 0]).unwrap(), poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]));
        assert_eq!(vandermonde(&[3, 0]).unwrap(), poly(2, &[(&[3, 0], 1), (&[0, 3], -1)]));
        let v = vandermonde(&[2, 1, 0]).unwrap();
        let x = |i| SparsePoly::var(3, i);
        let expected = &(&(&x(0) - &x(1)) * &(&x(0) - &x(2))) * &(&x(1) - &x(2));
        assert_eq!(v, expected);
        assert_eq!(v.len(), 6);
        assert_eq!(
            vandermonde(&[1, 1]),
            Err(Error::DegenerateAlternant(vec![1, 1]))
        );
    }

    #[test]
    fn schur_examples() {
        assert_eq!(
            schur_polynomial(&p(&[1, 1])).unwrap().into_poly(),
            poly(2, &[(&[1, 1], 1)])
        );
        assert_eq!(
            schur_polynomial(&p(&[2, 0])).unwrap().into_poly(),
            poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)])
        );
        let s22 = schur_polynomial(&p(&[2, 2, 0, 0])).unwrap();
        assert_eq!(s22.poly().coefficient_sum(), BigInt::from(20));
        assert!(s22.poly().is_symmetric());
        assert_eq!(s22.poly().homogeneous_degree(), Some(4));
    }

    #[test]
    fn schur_coefficient_examples() {
        let s20 = schur_polynomial(&p(&[2, 0])).unwrap();
        assert_eq!(schur_coefficient(&s20, &p(&[2, 0])).unwrap().value, BigInt::from(1));

        let c1 = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]).pow(4);
        let f = RootPolynomial::complex(c1).unwrap();
        // (z1+z2)^4 = s_(4,0) + 3 s_(3,1) + 2 s_(2,2)
        assert_eq!(schur_coefficient(&f, &p(&[2, 2])).unwrap().value, BigInt::from(2));
        assert_eq!(schur_coefficient(&f, &p(&[3, 1])).unwrap().value, BigInt::from(3));
        assert_eq!(schur_coefficient(&f, &p(&[4, 0])).unwrap().value, BigInt::from(1));
    }

    #[test]
    fn root_polynomial_validation() {
        assert_eq!(
            RootPolynomial::complex(poly(2, &[(&[2, 1], 1)])),
            Err(Error::NotSymmetric)
        );
        assert!(matches!(
            RootPolynomial::real(poly(2, &[(&[2, 1], 1), (&[1, 2], 1)])),
            Err(Error::NotEulerPontryagin(_))
        ));
    }

    #[test]
    fn real_schur_examples() {
        assert_eq!(
            real_schur_polynomial(&p(&[5, 5, 5, 5])).unwrap().into_poly(),
            poly(2, &[(&[5, 5], 1)])
        );
        assert_eq!(
            real_schur_polynomial(&p(&[7, 7, 3, 3])).unwrap().into_poly(),
            poly(2, &[(&[7, 3], 1), (&[5, 5], 1), (&[3, 7], 1)])
        );
        assert_eq!(
            real_schur_polynomial(&p(&[4, 4, 2, 2])).unwrap().into_poly(),
            poly(2, &[(&[4, 2], 1), (&[2, 4], 1)])
        );
        assert_eq!(
            real_schur_polynomial(&p(&[3, 2, 1, 0])),
            Err(Error::NotEvenOrOdd(vec![3, 2, 1, 0]))
        );
    }

    #[test]
    fn real_schur_coefficient_examples() {
        // 9 x1^3 x2^3 (4 (x1^2 + x2^2)^2 - 25 x1^2 x2^2)
        let f3 = poly(2, &[(&[7, 3], 36), (&[5, 5], -153), (&[3, 7], 36)]);
        let f3 = RootPolynomial::real(f3).unwrap();
        let l = real_schur_coefficient(&f3, &p(&[5, 5, 5, 5])).unwrap();
        assert_eq!(l.value, BigInt::from(-189));
        assert!(!l.sign_certain);
        let l = real_schur_coefficient(&f3, &p(&[7, 7, 3, 3])).unwrap();
        assert_eq!(l.value, BigInt::from(36));

        let s = real_schur_polynomial(&p(&[4, 4, 2, 2])).unwrap();
        assert_eq!(
            real_schur_coefficient(&s, &p(&[4, 4, 2, 2])).unwrap().value,
            BigInt::from(1)
        );
        assert!(matches!(
            real_schur_coefficient(&s, &p(&[3, 2, 1, 0])),
            Err(Error::NotEvenOrOdd(_))
        ));
    }

    #[test]
    fn real_coefficient_rejects_mixed_parity() {
        let f = RootPolynomial::complex_unchecked(poly(2, &[(&[2, 1], 1), (&[1, 2], 1)]));
        assert!(matches!(
            real_schur_coefficient(&f, &p(&[1, 1, 1, 1])),
            Err(Error::NotEulerPontryagin(_))
        ));
    }

    #[test]
    fn duality_examples() {
        assert_eq!(duality_pairing(&p(&[1, 0]), &p(&[1, 0]), 1).unwrap(), BigInt::from(1));
        // (2,0) is its own complement in the 2x2 box
        assert_eq!(duality_pairing(&p(&[2, 0]), &p(&[1, 1]), 2).unwrap(), BigInt::from(0));
        assert_eq!(duality_pairing(&p(&[2, 0]), &p(&[2, 0]), 2).unwrap(), BigInt::from(1));
        assert_eq!(duality_pairing(&p(&[2, 1]), &p(&[1, 0]), 2).unwrap(), BigInt::from(1));
        assert!(matches!(
            duality_pairing(&p(&[3, 0]), &p(&[0, 0]), 2),
            Err(Error::NotInRectangle { .. })
        ));
    }

    #[test]
    fn permutation_signs() {
        let perms = signed_permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().map(|(_, s)| s).sum::<i32>(), 0);
        assert_eq!(perms[0], (vec![0, 1, 2], 1));
        assert_eq!(perms[1], (vec![0, 2, 1], -1));
    }
}
