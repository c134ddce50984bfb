//! Finite permutation-group engine for deciding relative integrability:
//! given `G ≤ U`, is there `H ≤ U` with `H' = G`?
//!
//! The crate provides permutation arithmetic and stabilizer chains, the usual
//! structural operators (derived series, normal closure, socle), coset
//! quotients, subgroup enumeration for small groups, normalizers, and the
//! integrability decision procedures with their reductions. Constructors for
//! the classical and affine families used in the verification suites live in
//! [`constructors`].

pub mod budget;
pub mod catalog;
pub mod chain;
pub mod constructors;
pub mod datafile;
pub mod error;
pub mod field;
pub mod group;
pub mod integrability;
pub mod normalizer;
pub mod perm;
pub mod quotient;
pub mod report;
pub mod spec;
pub mod structure;
pub mod subgroups;
pub mod table;
pub mod verify;

pub use budget::Budgets;
pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Permutation;
