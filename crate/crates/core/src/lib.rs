//! Exact computations in the representation rings of symmetric groups and of
//! a few reflection groups.
//!
//! * [`partitions`]: partitions, first-row deletion, levels, hooks.
//! * [`sym_characters`]: character tables of `S_n` (Murnaghan–Nakayama).
//! * [`littlewood_richardson`]: LR coefficients by tableau enumeration.
//! * [`rep_ring`]: Kronecker products, the level filtration, graded products.
//! * [`hook_generation`]: expresses every irreducible as a polynomial in the
//!   exterior powers of the standard representation.
//! * [`generation_checker`]: decides whether a set of elements generates a
//!   representation ring, by saturating a lattice in Hermite normal form.
//! * [`reflection_groups`]: `G(d,1,2)` and `B_n`.

pub mod dvir;
pub mod error;
pub mod generation_checker;
pub mod hook_generation;
pub mod littlewood_richardson;
pub mod partitions;
pub mod reflection_groups;
pub mod rep_ring;
pub mod suite;
pub mod sym_characters;
pub mod virtual_character;

pub use error::{Error, Result};
pub use partitions::{parse_partition, Partition};
pub use rep_ring::RepRing;
pub use sym_characters::CharacterTable;
pub use virtual_character::{Combination, VirtualCharacter};
