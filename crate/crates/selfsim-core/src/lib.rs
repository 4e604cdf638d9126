//! Exact engine for self-similar group actions on rooted d-ary trees,
//! with the infinite dihedral instance built in.

mod error;
pub mod group;
pub mod parse;
pub mod pseudo;
pub mod word;

pub use error::SelfSimError;
pub use group::{AutomatonGroup, WreathRow};
pub use parse::{builtin, parse_group, BUILTIN_DIHEDRAL};
pub use pseudo::{check_pseudo_free, verify_dihedral_closed_forms, PseudoFreeOutcome, VerifiedTriple};
pub use word::{GroupWord, TreeWord};
