//! Exact-arithmetic toolkit for Coxeter and Artin groups given by labelled
//! graphs: reflection and braid-style representations over `Z` and
//! `Z[s^±, t^±]`, breadth-first enumeration of the finite groups and of
//! their images in `GL(n, Z/m)`, congruence-subgroup membership, root
//! systems of the simply-laced types, and the translation elements of the
//! affine families.

pub mod congruence;
pub mod engine;
pub mod error;
pub mod graph;
pub mod json;
pub mod laurent;
pub mod matrix;
pub mod rep;
pub mod roots;

pub use error::{Error, Result};
pub use graph::{catalog, classify, CoxeterGraph, Label};
pub use laurent::{Laurent, LaurentPoly, LaurentPolyF};
pub use matrix::{IntMatrix, LaurentMatrix, LaurentMatrixF, Mat, NumMatrix, ResidueMatrix, SmallIntMatrix};

pub use engine::{enumerate_group, garside_delta, longest_element, Word, WordMode, DEFAULT_CAP};

/// Default pseudo-random seed for the sampling verifiers.
pub const DEFAULT_SEED: u64 = 0xC0C0;
