//! Exact-arithmetic engine for the extended bicyclic semigroup, its congruence
//! lattice, five compactification models, and the neighborhood-base laws that
//! make their topologies checkable at window scale.

pub mod congruence;
pub mod cz;
pub mod error;
pub mod ext;
pub mod nbhd;

pub use congruence::{CongruenceSpec, Partition, Saturator};
pub use cz::{cz, CzElement, GreenRelation, Side, Window};
pub use error::{Error, Result};
pub use ext::{ExtElement, Model, ModelSpec};
