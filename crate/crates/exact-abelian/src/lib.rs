//! Exact integer linear algebra for computing with finitely generated
//! abelian groups: Smith normal form with tracked unimodular transforms,
//! cokernel presentations, subquotients and induced maps.
//!
//! All arithmetic is arbitrary precision; nothing here ever rounds.

mod error;
pub mod group;
pub mod hom;
pub mod matrix;
pub mod snf;
pub mod subquotient;

pub use error::AbelianError;
pub use group::FGAbelianGroup;
pub use hom::{AbHom, Quotient, Subgroup};
pub use matrix::IntMatrix;
pub use snf::{kernel_basis, lattice_eq, lattice_includes, preimage_lattice, saturation, snf, solve, SnfResult, Solver};
pub use subquotient::{induced_hom, subquotient, Subquotient};
