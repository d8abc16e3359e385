//! Polynomial maps on commutative monoids and abelian groups, their extension
//! over group completion, induced maps on `K₀`, simplicial modules under
//! polynomial functors, and characters of degree-`p` functors. All arithmetic
//! is exact.

pub mod algebra;
pub mod binomial;
pub mod characters;
pub mod error;
pub mod k0;
pub mod monoid_ring;
pub mod polymap;
pub mod simplicial;
pub mod suites;

pub use error::{Error, Result};
