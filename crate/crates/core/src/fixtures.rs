//! Bundled example algebras.

use crate::algebra::FiniteAlgebra;
use crate::alm::parse_algebra;

pub const FOUR_CHAIN_ALM: &str = include_str!("../../../fixtures/paper-4elem.alm");
pub const SIX_CHAIN_ALM: &str = include_str!("../../../fixtures/paper-6elem.alm");

/// The four-element chain `0 < a < b < c` with `+ = ∨`.
pub fn four_chain() -> FiniteAlgebra {
    parse_algebra(FOUR_CHAIN_ALM).expect("bundled fixture parses")
}

/// The six-element chain whose printed `+` table is not commutative.
pub fn six_chain() -> FiniteAlgebra {
    parse_algebra(SIX_CHAIN_ALM).expect("bundled fixture parses")
}
