//! Exact computations with minimal degenerations of dominant weights.
//!
//! The crate classifies adjacent pairs `λ ⤳ μ` in the dominance order of a
//! root system, attaches the geometric invariants of the corresponding
//! degeneration (singularity class, codimension, IC stalk polynomial, the
//! prime profile of modular decomposition numbers), and verifies the
//! representation-theoretic side (Freudenthal multiplicities, contravariant
//! Gram matrices, elementary divisors, strong linkage) — all over exact
//! integers.
//!
//! Modules:
//! - [`root`]: root data, weights, pairings, Weyl orbits;
//! - [`linalg`]: Smith normal form and elementary divisors;
//! - [`degeneration`]: dominance adjacency and its five-case classification;
//! - [`singularity`]: invariants and certificates of each degeneration;
//! - [`weyl`]: Weyl-module computations.

pub mod arith;
pub mod degeneration;
pub mod error;
pub mod linalg;
pub mod root;
pub mod singularity;
pub mod weyl;

pub use error::Error;
pub use root::{build_root_datum, RootDatum, RootVector, Weight};
