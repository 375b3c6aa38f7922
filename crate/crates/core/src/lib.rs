//! Minimal constituents of Foulkes characters.
//!
//! The crate has three layers:
//!
//! * combinatorics of partitions, `m`-subsets under majorization and set
//!   families of shape `(m^n)` ([`partitions`], [`subsets`], [`families`]);
//! * the homomorphisms from Specht modules into Foulkes modules attached to
//!   closed set families, with executable Garnir-relation checks ([`specht`]);
//! * an independent brute-force character oracle that decomposes Foulkes
//!   characters and their generalizations ([`oracle`], [`generalized`]).
//!
//! The [`dataset`] module ties these together for batch tables, and
//! [`io`] holds the JSON and CSV schemas shared with the `foulkes` binary.

pub mod config;
pub mod dataset;
pub mod error;
pub mod families;
pub mod generalized;
pub mod io;
pub mod oracle;
pub mod partitions;
pub mod specht;
pub mod subsets;

pub use config::Guards;
pub use error::{Error, Result};
pub use families::{SetFamily, TypedFamilyReport};
pub use partitions::{Composition, Partition};
pub use subsets::MSubset;
