//! Direct limits of stationary systems of finitely generated abelian
//! groups: decidable element equality, certified identification within the
//! catalog Z[1/2]^s + Z^r + torsion, and kernel/cokernel analysis of
//! level-compatible endomorphisms.

pub mod classify;
pub mod dyadic;
mod error;
pub mod endo;
pub mod system;

pub use classify::{classify_colimit, CertBounds, Certification, ColimitDescriptor};
pub use dyadic::Dyadic;
pub use endo::{colim_ker_coker, is_fixed_by, SystemEndo};
pub use error::LimitError;
pub use system::{ColimitElement, StationarySystem};
