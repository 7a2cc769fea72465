//! Signed partitions, the series that count them, and explicit bijections
//! between ordinary and signed partition classes.
//!
//! The crate is organized bottom-up: [`model`] holds the objects,
//! [`qseries`] exact truncated series, [`classes`] membership and
//! enumeration, [`bijections`] the maps, [`identity`] the catalog tying them
//! together, and [`harness`] the cross-checks.

pub mod bijections;
pub mod classes;
pub mod error;
pub mod harness;
pub mod identity;
pub mod model;
pub mod qseries;

pub use bijections::{BVariant, MapId, MapKind};
pub use classes::{ClassId, ClassRule, Member, Side};
pub use error::{Error, Result};
pub use harness::{
    verify_all, verify_bijection, verify_counts, verify_series, Status, SuiteBounds, VerificationReport, Verifier,
};
pub use identity::{catalog, IdentityDescriptor, IdentityId};
pub use model::{BinarySequence, ParityVariant, Partition, SignedPartition};
pub use qseries::{product_side, sum_side, TruncatedSeries};
