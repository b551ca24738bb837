//! Enumeration and counting of G-invariant linear codes over GF(q).
//!
//! The group algebra A = F[G] acts on F^n through a finite matrix group G
//! with gcd(|G|, q) = 1, so F^n is semisimple. Its submodules (the
//! G-invariant codes) are found component by component: central primitive
//! idempotents cut F^n into homogeneous components, each component's simple
//! submodules are enumerated from orbits, a sum-of-simples pass lists each
//! component submodule once, and the per-component lists are combined by direct sums.

pub mod algebra;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod gaussian;
pub mod group;
pub mod isomap;
pub mod linalg;
pub mod modaction;
pub mod oracle;
pub mod pipeline;
pub mod poly;
pub mod problem;
pub mod sumalg;

#[cfg(test)]
mod fixtures;

pub use error::{Error, Result};
