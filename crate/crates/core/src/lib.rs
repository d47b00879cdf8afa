//! A workbench for finite AL-monoids (autometrized lattice-ordered monoids).
//!
//! Algebras are finite operation tables ([`FiniteAlgebra`]). On top of them
//! the crate checks the defining axioms, computes ideals, congruences,
//! quotients, homomorphisms, direct and subdirect products, prime spectra
//! with their hull-kernel topology, and enumerates all small models up to
//! isomorphism.

pub mod algebra;
pub mod alm;
pub mod axioms;
pub mod congruence;
pub mod error;
pub mod fixtures;
pub mod ideals;
pub mod morphism;
pub mod product;
pub mod registry;
pub mod search;
pub mod spectrum;
pub mod subset;

pub use algebra::{derived_order, subalgebra_closure, Elem, FiniteAlgebra, Op, Table};
pub use alm::{parse_algebra, to_alm};
pub use error::{Error, Result};
pub use subset::Subset;
