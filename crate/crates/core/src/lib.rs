//! Bracket maps, Helson transforms and frame certification for orbit systems
//! `{Pi(g) phi}` of unitary representations of finite groups.
//!
//! Everything lives at finite scale: a group of order `n` acts on `C^d`, the
//! group von Neumann algebra is the span of the right-regular matrices, and
//! every certificate can be checked against a brute-force oracle.

pub mod cli;
pub mod error;
pub mod frames;
pub mod groups;
pub mod helson;
pub mod linalg;
pub mod oracle;
pub mod repr;
pub mod sampling;
pub mod vnalg;

pub use error::{Error, Result};
pub use groups::{FiniteGroup, GroupElement};
pub use repr::{action_representation, bracket, GroupAction, HVector, Representation};
pub use vnalg::{AlgOperator, GroupRef, RootMode, SeqVector};
