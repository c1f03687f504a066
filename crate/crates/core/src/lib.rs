//! Partitions of finite groups, partition-free groups and the classification
//! of minimal partition-free groups, over concrete Cayley tables.

pub mod bitset;
pub mod classifier;
pub mod corpus;
pub mod dsl;
pub mod error;
pub mod group;
pub mod numbers;
pub mod partition;
pub mod structure;

pub use bitset::ElementSet;
pub use error::{Error, Result};
pub use group::{Group, Limits, SubgroupSet};
