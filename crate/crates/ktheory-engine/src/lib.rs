//! K-theory of the self-similar dihedral tower: the symbolic matrix
//! recursion over the integer group ring, the K0 direct limit with its
//! dyadic coordinates, the shift endomorphism and the six-term collapse,
//! and the rational comparison against groupoid homology.

mod error;
pub mod groupring;
pub mod hk;
pub mod k0;
pub mod pv;

pub use error::KTheoryError;
pub use groupring::{matrix_recursion, recursion_from_scalar, GroupRingElement, GroupRingMatrix};
pub use hk::{hk_report, verdict, HkReport, HkRow, HkVerdict};
pub use k0::{k0_colimit, K0ClassVector, K0Data, Psi0Report};
pub use pv::{pv_compute, PvData};
