//! The topological full group of the self-similar dihedral groupoid:
//! bisection tables with germ-canonical composition, the index map to
//! degree-one homology, and the constructive transposition factorization of
//! index-zero elements.

mod error;
pub mod factor;
pub mod index;
pub mod prefix;
pub mod random;
pub mod table;

pub use error::FullGroupError;
pub use factor::{compose_all, factor, hat, Transposition};
pub use index::{ab_image, index, Z2};
pub use prefix::{complement_code, is_complete_prefix_code};
pub use random::random_table;
pub use table::{compose, expand_entry, inverse, validate_and_canonicalize, BisectionEntry, BisectionTable};
