//! Permutation groups, class functions, cyclotomic numbers and characters.

mod characters;
mod class_function;
mod cyclotomic;
mod group;
mod perm;

pub use characters::{abelian_irreducibles, is_effective, leq_char, CharacterTable, LinearCharacter};
pub use class_function::ClassFunction;
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicNumber};
pub use group::{cycle_key, ConjugacyClass, PermGroup, DEFAULT_GROUP_CAP};
pub use perm::Permutation;
