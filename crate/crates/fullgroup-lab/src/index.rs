//! The index map to degree-one homology, which for the dihedral instance
//! counts `b` letters mod 2 across the table, and the abelianization image
//! it computes (the index map is the abelianization map here because the
//! degree-zero homology vanishes).

use crate::error::FullGroupError;
use crate::table::BisectionTable;
use selfsim_core::AutomatonGroup;
use std::fmt;
use std::ops::Add;

/// An element of Z/2.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Z2(pub bool);

impl Z2 {
    pub const ZERO: Z2 = Z2(false);
    pub const ONE: Z2 = Z2(true);

    pub fn is_zero(&self) -> bool {
        !self.0
    }
}

impl Add for Z2 {
    type Output = Z2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Z2) -> Z2 {
        Z2(self.0 ^ rhs.0)
    }
}

impl fmt::Display for Z2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.0 { "1" } else { "0" })
    }
}

/// `sum_i rho(g_i)` with `rho(a) = 0`, `rho(b) = 1`.
pub fn index(group: &AutomatonGroup, table: &BisectionTable) -> Result<Z2, FullGroupError> {
    if !group.is_dihedral_instance() {
        return Err(FullGroupError::DihedralOnly);
    }
    let b = group.gen_index("b").expect("dihedral has b");
    let mut total = Z2::ZERO;
    for e in table.entries() {
        let count = e.g.syms().iter().filter(|&&s| s == b).count();
        if count % 2 == 1 {
            total = total + Z2::ONE;
        }
    }
    Ok(total)
}

/// The image in the abelianization of the full group; equals the index.
pub fn ab_image(group: &AutomatonGroup, table: &BisectionTable) -> Result<Z2, FullGroupError> {
    index(group, table)
}
