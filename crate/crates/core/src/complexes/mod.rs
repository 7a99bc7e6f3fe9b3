//! Graded chain complexes, their homology, cones, duals and stabilization.

mod chain;
pub mod graded;
pub mod json;
mod module;
mod stabilize;

pub use chain::{
    direct_sum, mapping_cone, scalar_map, shift_gradings, ChainComplex, ChainMap, Generator,
};
pub use graded::{homology_dimensions, MonomialRing};
pub use json::ComplexDoc;
pub use module::{GradedModule, Summand};
pub use stabilize::{stabilize, StabilizedComplex, ThetaLabel, U_W0, U_Z};
