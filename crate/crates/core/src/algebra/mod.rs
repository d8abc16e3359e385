//! Exact integer linear algebra, finitely generated abelian groups,
//! commutative monoids and group completion.

mod completion;
mod group;
mod matrix;
mod modp;
mod monoid;
mod snf;

pub use completion::{complete_map, group_completion, Completion, GroupHom, MonoidHom, MonoidMap};
pub use group::{fg_group_from_relations, Coords, FgAbelianGroup, MAX_ENUMERATED_TORSION};
pub use matrix::IntMatrix;
pub use modp::{is_prime, kernel_mod_p, rank_mod_p};
pub use monoid::{CommMonoid, FiniteMonoid, MonoidElement, DEFAULT_FINITE_CAP};
pub use snf::{integer_kernel, smith_normal_form, Kernel, Snf};

