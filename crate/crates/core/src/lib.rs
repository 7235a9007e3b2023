//! Finite actions of sets and groups, the generalized affine spaces built
//! from them, their torsion and curvature measures, and ternary Malcev
//! operations. Every notion is decided by exhaustive evaluation over finite
//! tables.

pub mod actions;
pub mod affine;
pub mod carriers;
pub mod deformation;
pub mod fields;
pub mod groups;
pub mod malcev;
pub mod workbench;

pub use actions::{Action, ActionDomain, ActionError, ClassificationReport};
pub use carriers::{CarrierError, Endofunction, FiniteSet};
pub use groups::{FiniteGroup, GroupError, VectorGroup};
pub use malcev::{Identity, MalcevError, MalcevStructure};
