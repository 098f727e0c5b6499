//! Exact representation theory of finite permutation groups.
//!
//! The crate enumerates finite permutation groups explicitly and computes,
//! with exact arithmetic throughout: conjugacy and real conjugacy classes,
//! complex character tables (Dixon's method over a suitable prime, lifted to
//! cyclotomic integers), real irreducible characters via Frobenius–Schur
//! indicators, induced characters and the monomorphism criteria for the
//! induction maps on R(H) and RO(H), subgroup lattices up to conjugacy,
//! fixed-point dimensions of real modules, and the Smith-matched /
//! P-orientability certificates for pairs of real modules, including a
//! bounded minimal-pair search.

pub mod chartab;
pub mod corpus;
pub mod cyclo;
pub mod error;
pub mod gf;
pub mod group;
pub mod grpfile;
pub mod induction;
pub mod lattice;
pub mod linalg;
pub mod linear;
pub mod perm;
pub mod report;
pub mod smith;
pub mod verify;

pub use error::{Error, Result};
pub use group::Group;
pub use perm::Permutation;
