//! Exact-arithmetic character tables for the sharply multiply transitive
//! permutation groups on 9, 10, 11 and 12 points.
//!
//! Starting from nothing but generator permutations, the crate
//!
//! * enumerates each group and extracts its conjugacy class data
//!   ([`permgroup`]),
//! * computes with class functions over exact cyclotomic numbers
//!   ([`cyclotomic`], [`classfun`]),
//! * evaluates symmetric-group characters by the Murnaghan-Nakayama
//!   recursion and induces/restricts along the point-stabilizer chain
//!   ([`indres`]),
//! * and replays a fixed derivation script that assembles the full
//!   character table of each group, verifying every intermediate claim
//!   against bundled reference tables and logging any divergence
//!   ([`derivation`]).
//!
//! The `chartab` binary exposes the `classes`, `derive` and `mn`
//! subcommands; the `examples/` directory shows each capability in
//! isolation.

pub mod classfun;
pub mod cli;
pub mod cyclotomic;
pub mod derivation;
pub mod error;
pub mod indres;
pub mod permgroup;

pub use classfun::{CharacterTable, ClassFrame, ClassFunction};
pub use cyclotomic::CycNum;
pub use derivation::{derive, derive_from_fixture_text, DerivationOutcome, GroupId};
pub use indres::Partition;
pub use permgroup::{GroupData, Perm};
