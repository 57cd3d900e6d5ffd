//! Torus maxima of the real root polynomial and log-scale trend tables.
//!
//! All logarithms are natural. Tables carry the base-10 value alongside.

use std::f64::consts::{FRAC_PI_2, LN_2, TAU};

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{binomial, double_factorial};
use crate::enumerate::{complex_count, incidence_complex, incidence_real, real_count, real_root_poly};
use crate::error::{Error, Result};
use crate::polynomial::TorusFunction;

/// Nodes reported as maximizers at most.
const ARGMAX_CAP: usize = 16;
/// Nodes within this relative distance of the maximum count as maximizers.
const ARGMAX_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TorusSample {
    pub d: u32,
    pub grid: usize,
    pub min_modulus: f64,
    pub max_modulus: f64,
    /// Real part of `F_d` has one strict sign and the imaginary part is
    /// negligible against `max_modulus`.
    pub sign_constant: bool,
    /// -1 or 1 when `sign_constant`, else 0.
    pub sign: i8,
    pub max_imaginary: f64,
    /// `(θ1, θ2)` of grid maximizers, in grid order.
    pub argmax_angles: Vec<(f64, f64)>,
}

impl TorusSample {
    /// Every reported maximizer lies within one grid cell of `θ1 − θ2 = ±π/2`.
    pub fn argmax_on_curve(&self) -> bool {
        let cell = TAU / self.grid as f64;
        !self.argmax_angles.is_empty()
            && self.argmax_angles.iter().all(|&(a, b)| {
                let diff = (a - b).rem_euclid(TAU);
                [FRAC_PI_2, 3.0 * FRAC_PI_2]
                    .iter()
                    .any(|c| (diff - c).abs() <= cell + 1e-12)
            })
    }
}

#[derive(Default)]
struct RowStats {
    min: f64,
    max: f64,
    max_im: f64,
    positive: bool,
    negative: bool,
    argmax: Vec<(usize, usize, f64)>,
}

/// Samples `F_d = f_d / (x1 x2)^m` on a `grid × grid` torus mesh, `f_d` the
/// real root polynomial for `k = 2`.
pub fn torus_scan(d: u32, grid: usize) -> Result<TorusSample> {
    if grid < 64 {
        return Err(Error::GridTooCoarse { grid, required: 64 });
    }
    let f = real_root_poly(d, 2)?.into_poly();
    let m = f.homogeneous_degree().unwrap_or(0) as f64 / 2.0;
    let step = TAU / grid as f64;

    let row = |i: usize| -> RowStats {
        let a = i as f64 * step;
        let mut s = RowStats {
            min: f64::INFINITY,
            ..RowStats::default()
        };
        for j in 0..grid {
            let b = j as f64 * step;
            let v = f.eval_angles(&[a, b]) * Complex64::cis(-m * (a + b));
            let r = v.norm();
            s.min = s.min.min(r);
            if r > s.max * (1.0 + ARGMAX_TOL) {
                s.argmax.clear();
            }
            if r >= s.max * (1.0 - ARGMAX_TOL) {
                s.argmax.push((i, j, r));
            }
            s.max = s.max.max(r);
            s.max_im = s.max_im.max(v.im.abs());
            s.positive |= v.re > 0.0;
            s.negative |= v.re < 0.0 || v.re == 0.0;
        }
        s
    };
    let rows: Vec<RowStats> = (0..grid).into_par_iter().map(row).collect();

    let min_modulus = rows.iter().map(|r| r.min).fold(f64::INFINITY, f64::min);
    let max_modulus = rows.iter().map(|r| r.max).fold(0.0, f64::max);
    let max_imaginary = rows.iter().map(|r| r.max_im).fold(0.0, f64::max);
    let positive = rows.iter().any(|r| r.positive);
    let negative = rows.iter().any(|r| r.negative);
    let sign_constant = (positive != negative) && max_imaginary <= 1e-8 * max_modulus;
    let sign = match (sign_constant, positive) {
        (false, _) => 0,
        (true, true) => 1,
        (true, false) => -1,
    };
    let argmax_angles = rows
        .iter()
        .flat_map(|r| r.argmax.iter())
        .filter(|(_, _, r)| *r >= max_modulus * (1.0 - ARGMAX_TOL))
        .take(ARGMAX_CAP)
        .map(|&(i, j, _)| (i as f64 * step, j as f64 * step))
        .collect();

    Ok(TorusSample {
        d,
        grid,
        min_modulus,
        max_modulus,
        sign_constant,
        sign,
        max_imaginary,
        argmax_angles,
    })
}

/// `C_d · prod_i prod_{l1<l2, l1+l2=d-2i} (l1² + l2²)^{2(i+1)}` with
/// `C_d = [d!! (d-2)!! ... 1]²`.
pub fn closed_form_max(d: u32) -> Result<BigUint> {
    if d % 2 == 0 {
        return Err(Error::EvenDegree(d));
    }
    let mut acc = BigUint::from(1u32);
    for e in (1..=d).step_by(2) {
        acc *= double_factorial(e);
    }
    acc = &acc * &acc;
    for i in 0..=(d - 1) / 2 {
        let e = d - 2 * i;
        for l1 in 1..e {
            let l2 = e - l1;
            if l1 >= l2 {
                break;
            }
            acc *= BigUint::from(l1 * l1 + l2 * l2).pow(2 * (i + 1));
        }
    }
    Ok(acc)
}

/// Natural log of a positive big integer, accurate for any size.
pub fn ln_big(n: &BigInt) -> f64 {
    let n = n.abs();
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = n.bits();
    if bits < 1000 {
        return n.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (&n >> shift).to_f64().unwrap_or(f64::INFINITY);
    top.ln() + shift as f64 * LN_2
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoteRow {
    pub family: String,
    /// `d` for hypersurface rows, `n` for incidence rows.
    pub parameter: u64,
    #[serde(serialize_with = "crate::serialize_decimal")]
    pub value: BigInt,
    pub exact_log: f64,
    pub exact_log10: f64,
    pub prediction: f64,
    /// `exact_log / prediction`, absent when the prediction vanishes.
    pub ratio: Option<f64>,
    /// Incidence rows: `exact_log / 2n`.
    pub normalized: Option<f64>,
    /// Complex rows: the proven upper bound `binom(d+k-1, k-1) · log d`.
    pub bound: Option<f64>,
    pub within_bound: Option<bool>,
}

impl AsymptoteRow {
    fn new(family: String, parameter: u64, value: BigInt, prediction: f64) -> Self {
        let exact_log = ln_big(&value);
        AsymptoteRow {
            family,
            parameter,
            exact_log,
            exact_log10: exact_log / std::f64::consts::LN_10,
            prediction,
            ratio: (prediction != 0.0).then(|| exact_log / prediction),
            normalized: None,
            bound: None,
            within_bound: None,
            value,
        }
    }
}

fn infeasible(d: u32, k: u32) -> Error {
    Error::InvalidParameter(format!("(d={d}, k={k}) is infeasible"))
}

/// `log N_d^e` against `(1/12) d³ log d` for real 3-planes.
pub fn real_asymptote_table(ds: &[u32]) -> Result<Vec<AsymptoteRow>> {
    ds.iter()
        .map(|&d| {
            let value = real_count(d, 2)?.value.ok_or_else(|| infeasible(d, 2))?;
            let prediction = (d as f64).powi(3) * (d as f64).ln() / 12.0;
            Ok(AsymptoteRow::new("real".into(), d as u64, value, prediction))
        })
        .collect()
}

/// `log N_{d,k}` against `d^{k-1} log d / (k-1)!`. The leading term is only
/// reported; `within_bound` checks the bound `λ ≤ d^{binom(d+k-1,k-1)}`.
pub fn complex_asymptote_table(ds: &[u32], k: u32) -> Result<Vec<AsymptoteRow>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let fact: f64 = (1..k).map(|i| i as f64).product();
    ds.iter()
        .map(|&d| {
            let value = complex_count(d, k)?.value.ok_or_else(|| infeasible(d, k))?;
            let ln_d = (d as f64).ln();
            let prediction = (d as f64).powi(k as i32 - 1) * ln_d / fact;
            let mut row = AsymptoteRow::new(format!("complex-k{k}"), d as u64, value, prediction);
            let sections = binomial((d + k - 1) as u64, (k - 1) as u64)
                .to_f64()
                .unwrap_or(f64::INFINITY);
            let bound = sections * ln_d;
            row.bound = Some(bound);
            row.within_bound = Some(row.exact_log <= bound * (1.0 + 1e-12) + 1e-12);
            Ok(row)
        })
        .collect()
}

/// Two families: complex incidence against `2n log 20`, real against `2n log 2`.
pub fn incidence_asymptote_table(ns: &[u32]) -> Result<Vec<AsymptoteRow>> {
    let mut complex = Vec::with_capacity(ns.len());
    let mut real = Vec::with_capacity(ns.len());
    for &n in ns {
        let two_n = 2.0 * n as f64;
        let mut row = AsymptoteRow::new(
            "incidence-complex".into(),
            n as u64,
            incidence_complex(n)?,
            two_n * 20f64.ln(),
        );
        row.normalized = Some(row.exact_log / two_n);
        complex.push(row);
        let mut row = AsymptoteRow::new(
            "incidence-real".into(),
            n as u64,
            incidence_real(n)?,
            two_n * LN_2,
        );
        row.normalized = Some(row.exact_log / two_n);
        real.push(row);
    }
    complex.extend(real);
    Ok(complex)
}
