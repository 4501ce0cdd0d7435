//! Exact character theory for finite permutation groups.
//!
//! Character values live in cyclotomic fields and every scalar is exact. On top
//! of the character tables the crate builds monomial decompositions with
//! verifiable certificates, order-assignment (Heilbronn) bookkeeping and its
//! inequalities, monomial-cone membership, and supercharacter theories.

#![allow(clippy::needless_range_loop)]

pub mod certify;
pub mod chartab;
pub mod classfun;
pub mod corpus;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod heilbronn;
pub mod linalg;
pub mod monomial;
pub mod par;
pub mod perm;
pub mod supercharacter;

pub use chartab::CharacterTable;
pub use classfun::ClassFunction;
pub use cyclotomic::{Cyclotomic, Rational};
pub use error::{Error, Result};
pub use group::{Group, PermGroup};
pub use perm::Perm;
