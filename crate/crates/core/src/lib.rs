//! Subgroup lattices and conjugacy-class posets of small finite groups.
//!
//! Groups are materialized as Cayley tables ([`group`]), their subgroups
//! enumerated exhaustively ([`subgroup`]), and the resulting posets
//! examined for breaking points and two-interval covers ([`poset`]).
//! [`verify`] checks the classification results over a pinned catalog and
//! [`scan`] sweeps whole families.

pub mod analysis;
pub mod bitset;
pub mod error;
pub mod group;
pub mod numtheory;
pub mod poset;
pub mod report;
pub mod scan;
pub mod structure;
pub mod subgroup;
pub mod verify;

pub use analysis::Analysis;
pub use error::{Error, Limits, Result};
pub use group::{
    build_group, direct_product, element_order, validate_group, GroupSpec, GroupTable,
};
pub use poset::{breaking_points, hasse_edges, interval, two_interval_cover, PosetKind, PosetView};
pub use subgroup::{closure, conjugacy_classes, enumerate_subgroups, Subgroup, SubgroupLattice};
