//! Constructive witnesses for Zariski-type topologies on groups.
//!
//! Permutations compose left to right: `p.compose(&q)` applies `p` first,
//! and `(x)p` is written `p.apply(x)`.

pub mod algebra;
pub mod error;
pub mod finite;
pub mod perm;
pub mod ragged;
pub mod random;
pub mod sepgroup;
pub mod symtop;
pub mod witness;
pub mod words;

pub use algebra::{AdditiveNaturals, Cancellative, Group, Monoid, SymOmega};
pub use error::{Error, Result};
pub use finite::{FiniteGroupTable, SetFamily};
pub use perm::{FinPerm, PartialBijection, Point};
pub use ragged::{normalize, normalize_traced, MatrixPair, NormalForm, RaggedMatrix};
pub use sepgroup::{GElement, GkElement, SeparatingGroup, TmPoint};
pub use witness::{construct_witness, intersect_witness, symw_oracle, verify_witness};
pub use words::{GroupWord, IneqPair, SemigroupWord, Sign};
