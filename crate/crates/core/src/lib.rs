//! Finite biracks and set-theoretic solutions of the Yang–Baxter equation.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`], [`table`], [`partition`], [`group`], [`congruence`]: the
//!   finite-algebra toolkit (permutations, operation tables, equivalence
//!   relations, permutation-group closure, congruences and quotients).
//! * [`birack`]: validated biracks, axiom reports, the braid relation,
//!   classification and multiplication groups.
//! * [`retraction`]: the retraction congruence `≈` (equal left translations
//!   under `∘` and equal right translations under `•`), quotient biracks,
//!   retraction towers and multipermutation levels.
//! * [`cycleset`]: cycle sets and their correspondence with involutive biracks.
//! * [`modes`]: idempotent medial groupoids, reductivity and quandles.
//! * [`constructions`] and [`builtin`]: generators and fixed example tables.
//! * [`enumerate`] and [`suite`]: exhaustive enumeration and the registry of
//!   properties checked over it.
//!
//! Elements of a carrier of size `n` are always `0..n`.

pub mod birack;
pub mod builtin;
pub mod congruence;
pub mod constructions;
pub mod cycleset;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod modes;
pub mod partition;
pub mod perm;
pub mod quasigroup;
pub mod retraction;
pub mod suite;
pub mod table;
pub mod verdict;

pub use birack::{check_axioms, Axiom, AxiomReport, Birack, Classification, SolutionView, Witness};
pub use error::{Error, Result};
pub use group::PermGroup;
pub use partition::Partition;
pub use perm::Permutation;
pub use quasigroup::LeftQuasigroup;
pub use table::BinaryOpTable;
pub use verdict::Verdict;
