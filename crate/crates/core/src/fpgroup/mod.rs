//! Finitely presented groups: words, braid brackets, coset enumeration,
//! abelianization and permutation-group structure.

pub mod abelian;
pub mod braid;
pub mod coset;
pub mod perm;
pub mod presentation;
pub mod word;

pub use abelian::{
    abelian_invariants, abelianization_order, elementary_divisors, smith_normal_form,
};
pub use braid::{
    artin_action, braid_bracket, braid_power, braid_word, BraidLetter, SIGMA1, SIGMA2,
};
pub use coset::{coset_enumerate, group_order, CosetTable, EnumerationError, DEFAULT_COSET_LIMIT};
pub use perm::{Perm, PermError, PermGroup, StructureTag};
pub use presentation::{ParseError, Presentation};
pub use word::{Letter, Word};

/// The permutation group a complete coset table on the trivial subgroup induces.
pub fn regular_rep(table: &CosetTable) -> Result<PermGroup, PermError> {
    PermGroup::from_coset_table(table)
}
