//! Pipelines for the manifold families, excision moves and the Künneth
//! formula.
//!
//! Topological identifications between families are metadata on
//! [`ExcisionMove`]; only the algebra on either side is computed. Every run
//! produces a [`Derivation`] whose log can be replayed.

mod family;
mod moves;
mod pipeline;

pub use family::{Family, FamilySpec, TwistSpec};
pub use moves::{apply_excision, kunneth, ExcisionMove};
pub use pipeline::{
    compute_borromean_zero_surgery, compute_twist_knot_zero_surgery, compute_two_bridge,
    compute_whitehead_zero_surgery, derive, non_relatedness_check, Derivation, DerivationLog,
    DerivationStep, Relatedness,
};
