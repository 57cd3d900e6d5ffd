//! Trapezoidal quadrature of the Cauchy integral over the torus.
//!
//! The integrand is `f(z) · V_base(z) · conj(V_target(z)) / k!`, averaged over
//! a uniform grid of `grid` nodes per axis. `V_base` is evaluated from its
//! product formula and `V_target` as a determinant, so nothing here reuses the
//! coefficient-extraction path. For polynomial integrands the rule is exact
//! (up to rounding) once `grid` exceeds every exponent in the integrand.
//!
//! When the integrand is homogeneous of degree zero it is constant along the
//! diagonal circle, and the first angle is pinned to zero; this drops one
//! axis of the grid without changing the result.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use super::{delta, real_profile, signed_permutations, RootPolynomial};
use crate::combinatorics::{Partition, Regime};
use crate::error::{Error, Result};
use crate::polynomial::TorusFunction;

struct Setup {
    k: usize,
    target: Vec<u32>,
    base: Vec<u32>,
    /// 1 for `V_δ`, 2 for `V_{2δ}`.
    base_power: i32,
}

fn setup(regime: Regime, alpha: &Partition) -> Result<Setup> {
    match regime {
        Regime::Complex => {
            let k = alpha.len();
            let base = delta(k);
            let target = alpha.parts().iter().zip(&base).map(|(a, b)| a + b).collect();
            Ok(Setup {
                k,
                target,
                base,
                base_power: 1,
            })
        }
        Regime::Real => {
            let profile = real_profile(alpha)?;
            let k = profile.len();
            let base: Vec<u32> = delta(k).into_iter().map(|d| 2 * d).collect();
            let target = profile.parts().iter().zip(&base).map(|(a, b)| a + b).collect();
            Ok(Setup {
                k,
                target,
                base,
                base_power: 2,
            })
        }
    }
}

/// Nodes per axis at which the rule is exact: `2D + 1`, where `D` bounds the
/// total degree of both halves of the integrand.
pub fn exactness_grid(f_degree: u32, regime: Regime, alpha: &Partition) -> Result<usize> {
    let s = setup(regime, alpha)?;
    let base: u32 = s.base.iter().sum();
    let target: u32 = s.target.iter().sum();
    Ok(2 * (f_degree + base).max(target) as usize + 1)
}

pub fn numeric_schur_coefficient(
    f: &RootPolynomial,
    alpha: &Partition,
    grid: usize,
) -> Result<Complex64> {
    numeric_coefficient(f.poly(), f.regime(), alpha, grid)
}

/// Quadrature value of the Schur coefficient of any torus function.
pub fn numeric_coefficient<F: TorusFunction + ?Sized>(
    f: &F,
    regime: Regime,
    alpha: &Partition,
    grid: usize,
) -> Result<Complex64> {
    let s = setup(regime, alpha)?;
    if f.nvars() != s.k {
        return Err(Error::ArityMismatch {
            expected: s.k,
            found: f.nvars(),
        });
    }
    let required = exactness_grid(f.degree(), regime, alpha)?;
    if grid < required {
        return Err(Error::GridTooCoarse { grid, required });
    }

    let base_deg: u32 = s.base.iter().sum();
    let target_deg: u32 = s.target.iter().sum();
    let pinned = f
        .homogeneous_degree()
        .is_some_and(|h| h + base_deg == target_deg);
    let first_free = usize::from(pinned);
    let free = s.k - first_free;
    let perms = signed_permutations(s.k);
    let step = TAU / grid as f64;

    let integrand = |angles: &[f64]| -> Complex64 {
        let z: Vec<Complex64> = angles
            .iter()
            .map(|&a| Complex64::cis(s.base_power as f64 * a))
            .collect();
        let mut v_base = Complex64::new(1.0, 0.0);
        for i in 0..s.k {
            for j in i + 1..s.k {
                v_base *= z[i] - z[j];
            }
        }
        // cis(target_i θ_j)
        let table: Vec<Vec<Complex64>> = s
            .target
            .iter()
            .map(|&t| angles.iter().map(|&a| Complex64::cis(t as f64 * a)).collect())
            .collect();
        let mut v_target = Complex64::new(0.0, 0.0);
        for (perm, sign) in &perms {
            let mut term = Complex64::new(*sign as f64, 0.0);
            for (i, &p) in perm.iter().enumerate() {
                term *= table[i][p];
            }
            v_target += term;
        }
        f.eval_angles(angles) * v_base * v_target.conj()
    };

    // one slab per value of the first free angle, summed in index order
    let slab = |first: usize| -> Complex64 {
        let mut angles = vec![0.0; s.k];
        if free == 0 {
            return integrand(&angles);
        }
        angles[first_free] = first as f64 * step;
        let mut idx = vec![0usize; free - 1];
        let mut acc = Complex64::new(0.0, 0.0);
        loop {
            for (slot, &i) in idx.iter().enumerate() {
                angles[first_free + 1 + slot] = i as f64 * step;
            }
            acc += integrand(&angles);
            // odometer over the remaining axes
            let mut pos = idx.len();
            loop {
                if pos == 0 {
                    return acc;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < grid {
                    break;
                }
                idx[pos] = 0;
            }
        }
    };

    let slabs: Vec<Complex64> = if free == 0 {
        vec![slab(0)]
    } else {
        (0..grid).into_par_iter().map(slab).collect()
    };
    let total: Complex64 = slabs.iter().sum();
    let nodes = (grid as f64).powi(free as i32);
    let k_factorial: f64 = (1..=s.k).map(|i| i as f64).product();
    Ok(total / nodes / k_factorial)
}
