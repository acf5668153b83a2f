//! Exact computation of chromatic quasisymmetric class functions over
//! linearized combinatorial Hopf monoids, their orbital and polynomial
//! specializations, coloring complexes, and the certificates that check the
//! structural theorems about them on concrete instances.

pub mod compositions;
pub mod error;
pub mod groups;
pub mod labels;

pub use error::{Error, Result};
pub use labels::{Ground, Mask};
pub mod json;
pub mod structures;

pub use structures::{CharacterSpec, HopfStructure, StructureKind};
pub mod chromatic;
pub mod complexes;
