//! Exact computation of face vectors of colorable simplicial complexes, clique
//! vectors of graphs and Turán clique counts, together with certificate
//! producing membership tests for the convex hull spanned by the truncations
//! of a clique vector.
//!
//! Everything here targets desk-scale instances: ground sets are capped at 64
//! vertices so that faces and neighborhoods fit in a single `u64` mask, and
//! all arithmetic is exact.

pub mod complex;
pub mod error;
pub mod format;
pub mod graph;
pub mod hull;
pub mod operators;
pub mod turan;
pub mod vector;
pub mod verify;

pub use complex::{Face, SimplicialComplex};
pub use error::{Error, Result};
pub use graph::Graph;
pub use hull::{HullCertificate, HullInstance, Violation};
pub use vector::IntVector;

/// Largest supported ground set.
pub const MAX_VERTICES: usize = 64;
