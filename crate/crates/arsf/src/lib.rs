//! Exact-arithmetic toolkit for arithmetic symmetric functions.
//!
//! The crate builds, in layers:
//!
//! - [`exact`]: arbitrary-precision rationals, cyclotomic numbers, and
//!   univariate polynomials / rational functions in a formal parameter `t`.
//! - [`partitions`]: partitions, prime-indexed multipartitions, semistandard
//!   tableaux, cocharge, and Kostka-Foulkes polynomials.
//! - [`symfunc`]: a single-alphabet symmetric function engine with basis
//!   conversions, Hall-Littlewood `P`/`Q`, modified Hall-Littlewood `H~`,
//!   and evaluation at eigenvalue multisets through power traces.
//! - [`galois`]: finite groups, characters, and prime-splitting providers
//!   for the built-in number fields.
//! - [`artin`]: norm-truncated multiplicative series over one alphabet per
//!   prime: Dedekind series, Artin series, the norm map, and identity
//!   verifiers.
//! - [`hecke`]: the Satake correspondence into finite spherical Hecke
//!   algebras for GL(n), convolution, and the `kappa`/`gamma` scalars.
//! - [`dirichlet`]: exact Dirichlet coefficients of truncated and stable
//!   shifted L-function products, plus double-precision evaluation.

pub mod artin;
pub mod dirichlet;
pub mod error;
pub mod exact;
pub mod galois;
pub mod hecke;
pub mod partitions;
pub mod symfunc;

pub use error::{ArsfError, Result};
pub use exact::{CyclotomicNumber, RatFun, Rational, UniPoly};
pub use partitions::{MultiPartition, Partition, PrimeKey, Tableau};
