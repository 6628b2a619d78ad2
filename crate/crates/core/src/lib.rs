//! Numerical semigroups and modular Frobenius pseudo-varieties.
//!
//! A modular Frobenius pseudo-variety `C(m, A)` is the set of numerical
//! semigroups of multiplicity `m` in which `s_1 + ... + s_k - m` is an element
//! whenever the residues of `s_1, ..., s_k` modulo `m` form a tuple of `A`.
//! Its members form a rooted tree with the ordinary semigroup
//! `{0, m, m+1, ...}` at the root, which [`tree::Explorer`] walks level by
//! level (one level per genus).
//!
//! * [`semigroup`]: construction, Apéry tables, invariants, generator removal.
//! * [`pattern`]: pattern sets, membership and children in `C(m, A)`.
//! * [`tree`]: breadth-first enumeration by genus, optionally parallel.
//! * [`families`]: n-level, n-thin and strong semigroups with generator-level
//!   fast paths.
//! * [`oracle`]: brute-force element-set implementations used as ground truth.

pub mod error;
pub mod families;
pub mod oracle;
pub mod pattern;
pub mod semigroup;
pub mod tree;

pub use error::{Error, Result};
pub use families::{FamilyDescriptor, FamilyKind, FamilyRule};
pub use pattern::{Child, PatternSet};
pub use semigroup::{AperyTable, InvariantReport, NumericalSemigroup};
pub use tree::{build_tree, enumerate_genus, ChildRule, Explorer, TreeLevel, TreeNode};
