//! Subspace lattices of finite vector spaces over GF(q).
//!
//! Builds the lattice of all subspaces of GF(q)^m with the orthogonality
//! involution of the dot form, decides the classical lattice laws on it by
//! exhaustive search, and carries out the constructions around the
//! threshold dimension m(q) below which the lattice is orthomodular.

pub mod cli;
pub mod constructs;
pub mod error;
pub mod gfield;
pub mod lattice;
pub mod linvec;
pub mod props;
pub mod reference;
pub mod report;

pub use error::{Error, Result};
pub use gfield::{FieldElement, FieldSpec};
pub use lattice::{OrthoLattice, SubspaceLattice};
pub use linvec::{FVector, Subspace};
