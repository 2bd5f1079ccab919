//! Exact computations for vertex operator algebras generated by Virasoro
//! vectors `w^{ij}` of discrete-series central charge: minimal-model data,
//! the Griess algebra `V_2`, its automorphisms and positivity, and a
//! concrete realization inside a lattice vertex algebra.
//!
//! All arithmetic is over `Q` ([`scalar::Scalar`]); nothing is floating point.

pub mod cli;
pub mod error;
pub mod gram;
pub mod griess;
pub mod lattice;
pub mod linalg;
pub mod minimal_model;
pub mod par;
pub mod scalar;

pub use error::{Error, Result};
pub use griess::{GriessAlgebra, GriessElement, LinearEndo, PairIndex};
pub use scalar::Scalar;
