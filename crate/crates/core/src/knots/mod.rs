//! Knot complexes of thin knots and the large surgery formula.
//!
//! A [`KnotComplex`] stores the generators of the `U^0` column of `CFK∞`
//! with their Alexander and Maslov gradings. An arrow from `x` to `y` with
//! drops `(a, b)` means `∂[x, i, j]` contains `[y, i - a, j - b]`.

mod complex;
mod cone;
mod spec;
mod surgery;
mod thin;

pub use complex::{Arrow, KnotComplex, KnotGenerator};
pub use cone::{flip_symmetry, twisted_zero_surgery_cone};
pub use spec::ThinKnotSpec;
pub use surgery::{large_surgery, Flavor, SurgeryRequest};
pub use thin::build_thin_complex;
