//! Enumerative counts as Schur coefficients of root polynomials.
//!
//! Complex counts of `(k-1)`-planes on a degree-`d` hypersurface take the
//! root polynomial `f_d = prod (l_1 z_1 + ... + l_k z_k)` over compositions of
//! `d`. Real signed counts of `(2k-1)`-planes take the square root of the
//! product of difference forms over compositions of `d` into `2k` parts.
//! Real values are reported in absolute value.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::combinatorics::{
    binomial, catalan, compositions, feasibility, to_bigint, Feasibility, Partition, Regime,
};
use crate::error::{Error, Result};
use crate::polynomial::{LinearFormProduct, PolyPower, SparsePoly, TorusFunction};
use crate::schur::{
    exactness_grid, numeric_coefficient, real_schur_coefficient, schur_coefficient,
    schur_polynomial, RootPolynomial,
};

pub fn grassmannian_orientable(k: u64, m: u64) -> bool {
    (k + m) % 2 == 0
}

pub fn sym_power_orientable(d: u64, k: u64) -> bool {
    k == 0 || binomial(d + k - 1, k).bit(0) == false
}

/// `binom(d+k-1, k-1) = k m` and `k + m ≡ d m (mod 2)`.
pub fn euler_number_defined(d: u64, k: u64, m: u64) -> bool {
    euler_number_defined_for(&[d], k, m)
}

/// Same criterion for a direct sum `⊕ Sym^{d_i}`: total rank equals the
/// dimension `k m`, and the first Stiefel-Whitney classes match.
pub fn euler_number_defined_for(degrees: &[u64], k: u64, m: u64) -> bool {
    if k == 0 {
        return false;
    }
    let rank: BigUint = degrees.iter().map(|&d| binomial(d + k - 1, k - 1)).sum();
    let w1: BigUint = degrees.iter().map(|&d| binomial(d + k - 1, k)).sum();
    rank == BigUint::from(k) * m && (k + m) % 2 == u64::from(w1.bit(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Orientability {
    pub orientable_grassmannian: bool,
    pub sym_power_orientable: bool,
    pub euler_number_defined: bool,
}

impl Orientability {
    /// Predicates for the rank-`rank` Grassmannian and `⊕ Sym^{d_i}`.
    pub fn evaluate(degrees: &[u64], rank: u64, m: Option<u64>) -> Self {
        let w1: BigUint = degrees.iter().map(|&d| binomial(d + rank - 1, rank)).sum();
        Orientability {
            orientable_grassmannian: m.is_some_and(|m| grassmannian_orientable(rank, m)),
            sym_power_orientable: !w1.bit(0),
            euler_number_defined: m.is_some_and(|m| euler_number_defined_for(degrees, rank, m)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub regime: Regime,
    /// Degree of the hypersurface, or one entry per hypersurface of a
    /// complete intersection.
    pub degrees: Vec<u32>,
    pub k: u32,
    pub m: Option<u64>,
    /// Absent when infeasible; non-negative in the real regime.
    #[serde(serialize_with = "crate::serialize_optional_decimal")]
    pub value: Option<BigInt>,
    pub feasible: bool,
    pub orientability: Orientability,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CountReport {
    fn new(regime: Regime, degrees: Vec<u32>, k: u32, m: Option<u64>, rank: u64) -> Self {
        let ds: Vec<u64> = degrees.iter().map(|&d| d as u64).collect();
        CountReport {
            orientability: Orientability::evaluate(&ds, rank, m),
            regime,
            degrees,
            k,
            m,
            value: None,
            feasible: false,
            elapsed: Duration::ZERO,
        }
    }

    fn infeasible(f: &Feasibility) -> Self {
        CountReport::new(f.regime, vec![f.d], f.k, f.m, f.rank() as u64)
    }
}

fn composition_forms(d: u32, parts: usize) -> Vec<Vec<i64>> {
    compositions(d, parts)
        .iter()
        .map(|c| c.parts().iter().map(|&p| p as i64).collect())
        .collect()
}

fn check_degree(d: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidParameter("degree must be at least 1".into()));
    }
    Ok(())
}

fn require_odd(d: u32) -> Result<()> {
    check_degree(d)?;
    if d % 2 == 0 {
        return Err(Error::EvenDegree(d));
    }
    Ok(())
}

fn to_u32(m: u64) -> Result<u32> {
    u32::try_from(m).map_err(|_| Error::InvalidParameter(format!("m = {m} is too large")))
}

/// The unexpanded complex root polynomial of `Sym^d` on the rank-`k` bundle.
pub fn complex_root_factors(d: u32, k: u32) -> Result<LinearFormProduct> {
    check_degree(d)?;
    LinearFormProduct::new(k as usize, composition_forms(d, k as usize))
}

pub fn complex_root_poly(d: u32, k: u32) -> Result<RootPolynomial> {
    Ok(RootPolynomial::complex_unchecked(
        complex_root_factors(d, k)?.expand(),
    ))
}

/// Number of complex `(k-1)`-planes on a generic degree-`d` hypersurface.
pub fn complex_count(d: u32, k: u32) -> Result<CountReport> {
    let start = Instant::now();
    let f = feasibility(d, k, Regime::Complex)?;
    let mut report = CountReport::infeasible(&f);
    let Some(m) = f.m else {
        return Ok(report);
    };
    let root = complex_root_poly(d, k)?;
    let lambda = schur_coefficient(&root, &Partition::constant(to_u32(m)?, k as usize))?;
    report.value = Some(lambda.value);
    report.feasible = true;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// The real root factors `(l_1 - l̄_1) x_1 + ... + (l_k - l̄_k) x_k` over all
/// compositions of `d` into `2k` parts, with scalar `(-1)^{N/2}` so that the
/// product is the perfect square `f_d^2`.
pub fn real_square_factors(d: u32, k: u32) -> Result<LinearFormProduct> {
    require_odd(d)?;
    let forms: Vec<Vec<i64>> = composition_forms(d, 2 * k as usize)
        .into_iter()
        .map(|c| c.chunks(2).map(|pair| pair[0] - pair[1]).collect())
        .collect();
    // odd d: swapping l_i and l̄_i pairs the forms up, so N is even
    let half = forms.len() / 2;
    let sign = if half % 2 == 0 { 1 } else { -1 };
    Ok(LinearFormProduct::new(k as usize, forms)?.with_scalar(BigInt::from(sign)))
}

pub fn real_square_poly(d: u32, k: u32) -> Result<SparsePoly> {
    Ok(real_square_factors(d, k)?.expand())
}

/// Real root polynomial of the Euler class, fixed by a positive leading
/// coefficient.
pub fn real_root_poly(d: u32, k: u32) -> Result<RootPolynomial> {
    let root = real_square_poly(d, k)?.exact_sqrt()?;
    Ok(RootPolynomial::real_unchecked(root))
}

/// Closed factored form for `k = 2`:
/// `prod_i [ (d-2i)^2 x1 x2 prod_{l1<l2, l1+l2=d-2i} (l1² x1² - l2² x2²)(l2² x1² - l1² x2²) ]^{i+1}`.
pub fn factored_real_root_poly(d: u32) -> Result<RootPolynomial> {
    require_odd(d)?;
    let mut acc = SparsePoly::one(2);
    for i in 0..=(d - 1) / 2 {
        let e = d - 2 * i;
        let mut group = SparsePoly::monomial((e as i64) * (e as i64), &[1, 1]);
        for l1 in 1..e {
            let l2 = e - l1;
            if l1 >= l2 {
                break;
            }
            let (a, b) = ((l1 * l1) as i64, (l2 * l2) as i64);
            let q1 = SparsePoly::from_terms(2, [(vec![2, 0], a), (vec![0, 2], -b)])?;
            let q2 = SparsePoly::from_terms(2, [(vec![2, 0], b), (vec![0, 2], -a)])?;
            group = &group * &(&q1 * &q2);
        }
        acc = &acc * &group.pow(i + 1);
    }
    Ok(RootPolynomial::real_unchecked(acc))
}

/// Signed count of real `(2k-1)`-planes on a generic real hypersurface of odd
/// degree `d`, in absolute value.
pub fn real_count(d: u32, k: u32) -> Result<CountReport> {
    let start = Instant::now();
    require_odd(d)?;
    let f = feasibility(d, k, Regime::Real)?;
    let mut report = CountReport::infeasible(&f);
    let Some(m) = f.m else {
        return Ok(report);
    };
    let root = real_root_poly(d, k)?;
    let lambda = real_schur_coefficient(&root, &Partition::constant(to_u32(m)?, 2 * k as usize))?;
    report.value = Some(lambda.value.abs());
    report.feasible = true;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Signed count of real 3-planes on `r` generic real cubics in `P^{5r+3}`;
/// `r = 0` is the empty intersection with count 1.
pub fn cubic_ci_real(r: u32) -> Result<CountReport> {
    let start = Instant::now();
    let m = 5 * r as u64;
    let mut report = CountReport::new(Regime::Real, vec![3; r as usize], 2, Some(m), 4);
    let f = RootPolynomial::real_unchecked(real_root_poly(3, 2)?.poly().pow(r));
    let lambda = real_schur_coefficient(&f, &Partition::constant(5 * r, 4))?;
    report.value = Some(lambda.value.abs());
    report.feasible = true;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// `sum_j a_j C_j` where `9^r (25 - 4t)^r = sum_j a_j t^j`.
pub fn catalan_substitution(r: u32) -> BigInt {
    let nine_r = BigInt::from(9).pow(r);
    (0..=r)
        .map(|j| {
            let a_j = &nine_r
                * to_bigint(binomial(r as u64, j as u64))
                * BigInt::from(25).pow(r - j)
                * BigInt::from(-4).pow(j);
            a_j * to_bigint(catalan(j))
        })
        .sum()
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    Ok(())
}

/// `|p_1^{2n}[G_4(R^{2n+4})]|`: real 3-planes meeting `2n` generic
/// `(2n-1)`-planes along lines, counted with signs.
pub fn incidence_real(n: u32) -> Result<BigInt> {
    check_n(n)?;
    let p1 = SparsePoly::from_terms(2, [(vec![2, 0], 1), (vec![0, 2], 1)])?;
    let f = RootPolynomial::real_unchecked(p1.pow(2 * n));
    Ok(real_schur_coefficient(&f, &Partition::constant(2 * n, 4))?
        .value
        .abs())
}

/// `σ_{2,2}^{2n}[G_4(C^{2n+4})]`.
pub fn incidence_complex(n: u32) -> Result<BigInt> {
    check_n(n)?;
    let s22 = schur_polynomial(&Partition::new(vec![2, 2, 0, 0])?)?;
    let f = RootPolynomial::complex_unchecked(s22.poly().pow(2 * n));
    Ok(schur_coefficient(&f, &Partition::constant(2 * n, 4))?.value)
}

/// A count as a Schur-coefficient problem, used to cross-check the exact
/// value against torus quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountProblem {
    Complex { d: u32, k: u32 },
    Real { d: u32, k: u32 },
    CubicCi { r: u32 },
    IncidenceReal { n: u32 },
    IncidenceComplex { n: u32 },
}

impl CountProblem {
    pub fn regime(&self) -> Regime {
        match self {
            CountProblem::Complex { .. } | CountProblem::IncidenceComplex { .. } => {
                Regime::Complex
            }
            _ => Regime::Real,
        }
    }

    /// The constant partition `(m, ..., m)` whose coefficient is the count.
    pub fn partition(&self) -> Result<Partition> {
        let (regime, d, k) = match *self {
            CountProblem::Complex { d, k } => (Regime::Complex, d, k),
            CountProblem::Real { d, k } => {
                require_odd(d)?;
                (Regime::Real, d, k)
            }
            CountProblem::CubicCi { r } => return Ok(Partition::constant(5 * r, 4)),
            CountProblem::IncidenceReal { n } | CountProblem::IncidenceComplex { n } => {
                return Ok(Partition::constant(2 * n, 4))
            }
        };
        let f = feasibility(d, k, regime)?;
        let m = f.m.ok_or_else(|| {
            Error::InvalidParameter(format!("(d={d}, k={k}) is infeasible in the {regime} regime"))
        })?;
        let len = match regime {
            Regime::Complex => k as usize,
            Regime::Real => 2 * k as usize,
        };
        Ok(Partition::constant(to_u32(m)?, len))
    }

    /// The root polynomial in the cheapest form to evaluate on the torus.
    pub fn integrand(&self) -> Result<Box<dyn TorusFunction>> {
        Ok(match *self {
            CountProblem::Complex { d, k } => Box::new(complex_root_factors(d, k)?),
            CountProblem::Real { d, k } => Box::new(real_root_poly(d, k)?.into_poly()),
            CountProblem::CubicCi { r } => Box::new(PolyPower {
                base: real_root_poly(3, 2)?.into_poly(),
                exponent: r,
            }),
            CountProblem::IncidenceReal { n } => Box::new(PolyPower {
                base: SparsePoly::from_terms(2, [(vec![2, 0], 1), (vec![0, 2], 1)])?,
                exponent: 2 * n,
            }),
            CountProblem::IncidenceComplex { n } => Box::new(PolyPower {
                base: schur_polynomial(&Partition::new(vec![2, 2, 0, 0])?)?.into_poly(),
                exponent: 2 * n,
            }),
        })
    }

    /// Exact count (absolute value in the real regime).
    pub fn exact(&self) -> Result<BigInt> {
        match *self {
            CountProblem::Complex { d, k } => report_value(complex_count(d, k)?),
            CountProblem::Real { d, k } => report_value(real_count(d, k)?),
            CountProblem::CubicCi { r } => report_value(cubic_ci_real(r)?),
            CountProblem::IncidenceReal { n } => incidence_real(n),
            CountProblem::IncidenceComplex { n } => incidence_complex(n),
        }
    }

    /// Quadrature value and the grid used; `None` picks the exactness threshold.
    pub fn numeric(&self, grid: Option<usize>) -> Result<(Complex64, usize)> {
        let alpha = self.partition()?;
        let f = self.integrand()?;
        let grid = match grid {
            Some(g) => g,
            None => exactness_grid(f.degree(), self.regime(), &alpha)?,
        };
        let v = numeric_coefficient(f.as_ref(), self.regime(), &alpha, grid)?;
        Ok((v, grid))
    }
}

fn report_value(r: CountReport) -> Result<BigInt> {
    r.value.ok_or_else(|| {
        Error::InvalidParameter(format!(
            "degrees {:?} with k = {} are infeasible",
            r.degrees, r.k
        ))
    })
}

/// Relative gap `| |numeric| - |exact| | / max(1, |exact|)`.
pub fn relative_gap(numeric: Complex64, exact: &BigInt) -> f64 {
    let e = exact.abs().to_f64().unwrap_or(f64::INFINITY);
    (numeric.norm() - e).abs() / e.max(1.0)
}

pub fn is_one(v: &BigInt) -> bool {
    v.is_one()
}
