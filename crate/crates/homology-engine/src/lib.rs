//! Homology of the self-similar dihedral action: group homology with
//! cylinder coefficients via a periodic resolution, the stabilized groupoid
//! homology with its shift action, the long exact sequence assembly, and a
//! germ-level chain model for witness verification in low degrees.

mod error;
pub mod colimit;
pub mod fox;
pub mod germ;
pub mod les;
pub mod module;
pub mod resolution;
pub mod stabilized;

pub use error::HomologyError;
pub use colimit::{homology_colimit, refinement_induced, HomologyColimit};
pub use fox::{fox_cycle, fox_derivative};
pub use germ::{germ_witness_check, GermChain, GermSymbol};
pub use les::{les_assemble, les_assemble_systems, torsion_flags, LesEntry, LesTable};
pub use module::{check_block_compatibility, depth_module, refinement_matrix, shift_matrix_deg0, PermutationModule};
pub use resolution::{coefficient_chain_map, group_homology, group_homology_unsplit, HomologyGroup, ResolutionComplex};
pub use stabilized::{stabilized_homology, SigmaAction, StabilizedHomology};
