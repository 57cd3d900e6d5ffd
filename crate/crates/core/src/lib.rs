//! Exact Schubert-calculus counts of projective subspaces on hypersurfaces.
//!
//! Every cohomology class is carried by its root polynomial, a symmetric
//! polynomial with big-integer coefficients. Characteristic numbers become
//! Schur coefficients, which are read off exactly by coefficient extraction;
//! a torus quadrature of the same Cauchy integral is kept as an independent
//! check.
//!
//! - [`combinatorics`]: partitions, compositions, feasibility of `(d, k)`.
//! - [`polynomial`]: sparse polynomial arithmetic, exact division and square root.
//! - [`schur`]: alternants, Schur polynomials and coefficients (complex and real).
//! - [`enumerate`]: the enumerative counts themselves.
//! - [`asymptotics`]: torus maxima and log-scale trend tables.

pub mod asymptotics;
pub mod combinatorics;
pub mod enumerate;
pub mod error;
pub mod polynomial;
pub mod schur;

pub use combinatorics::{Partition, Regime};
pub use error::{Error, Result};
pub use polynomial::SparsePoly;
pub use schur::RootPolynomial;

/// Version string embedded in serialized results and cache entries.
pub const ENGINE_VERSION: &str = concat!("schubert-core ", env!("CARGO_PKG_VERSION"));

/// Serializes big integers as decimal strings so no precision is lost.
pub fn serialize_decimal<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub(crate) fn serialize_optional_decimal<T: std::fmt::Display, S: serde::Serializer>(
    v: &Option<T>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}
