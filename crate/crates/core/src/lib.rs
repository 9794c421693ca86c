//! Invariants of numerical semigroup rings `k[[H]]`.
//!
//! * [`semigroup`]: membership, gaps, Frobenius number, Apéry sets, orders,
//!   symmetry.
//! * [`index`]: `N_s`, the Auslander index (generalized Loewy length in the
//!   Gorenstein case) and the Ding gap `mult - index - codim + 1`.
//! * [`ci3`]: complete intersections of embedding dimension 3 and their
//!   closed-form `N` values.
//! * [`family`]: gluings and the `H_{n,a}` and three-generator families.
//! * [`verify`], [`corpus`], [`oracle`]: randomized cross-checks.

pub mod ci3;
pub mod claims;
pub mod corpus;
pub mod error;
pub mod family;
pub mod index;
pub mod oracle;
pub mod semigroup;
pub mod verify;

pub use ci3::{detect_ci3, index_ci3, CiEdim3Structure};
pub use error::{NsError, Result};
pub use family::{build_ding_family_3gen, build_hna, glue, FamilySpec, GluedSemigroup, GluingStep};
pub use index::{index, index_auto, IndexReport, Method};
pub use semigroup::{AperyTable, Limits, NumericalSemigroup, OrderTable};
