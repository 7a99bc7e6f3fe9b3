//! Grading arithmetic, exact triangle chases, reconstruction of the plus
//! flavor from the hat flavor, Novikov base change and orientation reversal.
//!
//! Everything here works on graded dimension tables and [`GradedModule`]s;
//! no chain complexes are involved.
//!
//! [`GradedModule`]: crate::complexes::GradedModule

mod cobordism;
mod dims;
mod duality;
mod plus;
mod triangle;

pub use cobordism::{c1_square, grading_shift, CobordismData, CobordismRole};
pub use dims::GradedDims;
pub use duality::{novikov_base_change, orientation_reverse};
pub use plus::{reconstruct_plus, InfinityModel};
pub use triangle::{triangle_chase, ShiftBound, TriangleShifts};
