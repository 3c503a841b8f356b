//! Computational toolkit for finite permutation groups, braid and Hurwitz
//! actions, orbifold arithmetic, Beauville structures, ADE configurations and
//! numerical invariants of algebraic surfaces.

pub mod beauville;
pub mod braid;
pub mod dynkin;
pub mod hurwitz;
pub mod invariants;
pub mod orbifold;
pub mod permgroup;

pub use permgroup::{ElementSet, Perm, PermError};
