//! Permutations, permutation groups and abstract group tables.

mod group;
mod perm;
mod search;
mod symtab;
mod table;

pub use group::PermGroup;
pub use perm::{Perm, MAX_DEGREE};
pub use search::{
    automorphisms, automorphisms_with_cap, find_isomorphism, isomorphic, isomorphic_with_cap,
};
pub use symtab::{SymTable, MAX_TABLE_DEGREE};
pub use table::GroupTable;
