//! Generating graphs of finite groups, chief-series degree factorizations,
//! tensor products of generating graphs and finite-quotient towers.

pub mod caps;
pub mod error;
pub mod graph;
pub mod group;
pub mod local;
pub mod par;
pub mod product;
pub mod suites;
pub mod tower;

pub use caps::Caps;
pub use error::{Error, Result};
pub use group::{build_group, Elem, Group, GroupSpec, Subgroup};
