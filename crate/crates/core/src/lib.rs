//! Combinatorial engine for spaces of stability conditions on the
//! Calabi-Yau-N category of an ADE quiver: tilting posets of hearts, the
//! braid-covering poset, higher cluster mutation, Garside structure checks,
//! strata charts and exact order-complex homology.

pub mod braid;
pub mod cluster;
pub mod cluster_verify;
pub mod repq;
pub mod strata;
pub mod tiltp;
pub mod topo;
pub mod dynkin;
pub mod hearts;
pub mod linalg;

pub use braid::{BraidElement, BraidGroup};
pub use dynkin::{DimVec, DynkinDiagram, Family, Quiver};
