//! Finite permutation groups, prime graphs, cut-group rationality and
//! F_p-modules, with a harness that checks lemma instances on explicit groups.

pub mod arith;
pub mod bounds;
pub mod classify;
pub mod construct;
pub mod dsl;
pub mod error;
pub mod fpmod;
pub mod group;
pub mod lab;
pub mod numth;
pub mod perm;

pub use arith::{GkGraph, RationalityVerdict};
pub use bounds::Bounds;
pub use classify::Classification;
pub use construct::{construct, GroupSpec, SdAction};
pub use error::{Error, Result};
pub use fpmod::{FpMatrix, ModuleAction};
pub use group::{FiniteGroup, Subgroup};
pub use perm::Permutation;
