//! Numerical semigroups, their even-gap structure and weights.
//!
//! A [`NumericalSemigroup`] is stored as a membership bitmap up to its
//! conductor. [`StructureProfile`] derives the indexed sequences used
//! throughout; the remaining modules evaluate hyperellipticity conditions,
//! weight bounds and sumset inequalities, and sweep them over every
//! semigroup of a given genus.

mod bitset;
pub mod census;
pub mod enumeration;
mod error;
pub mod exec;
pub mod family;
pub mod hyperelliptic;
pub mod inspect;
mod profile;
mod semigroup;
pub mod sumsets;
pub mod verify;
pub mod weights;

pub use census::{census, CensusFilter, CensusRow};
pub use enumeration::{brute_force_enumerate, count_by_genus, enumerate_genus, EnumerationNode};
pub use error::{Error, Result};
pub use exec::{map_reduce, Execution};
pub use family::{family, FamilySpec};
pub use inspect::InspectRecord;
pub use profile::StructureProfile;
pub use semigroup::NumericalSemigroup;
pub use verify::{verify_theorem, TheoremId, TheoremReport, VerifyOptions};
pub use weights::weight;
