//! Exact algebra for twisted Heegaard Floer computations.
//!
//! The crate is organised bottom-up:
//!
//! * [`rings`]: F2-polynomials, Laurent polynomials, rational functions in
//!   `t`, polynomials in `U`, and finite Novikov sums with rational exponents.
//! * [`matrix`] and [`snf`]: dense matrices, Smith normal form, signatures.
//! * [`complexes`]: graded chain complexes, homology, mapping cones,
//!   free stabilization and duals.
//! * [`knots`]: thin knot complexes and the large surgery formula.
//! * [`sequences`]: grading shifts, exact triangle chases, reconstruction of
//!   the plus flavor and Novikov base change.
//! * [`excision`]: end-to-end pipelines for the manifold families.
//!
//! All arithmetic is exact. Gradings are rationals with denominator dividing 4.

#![allow(clippy::suspicious_arithmetic_impl)]

pub mod complexes;
pub mod error;
pub mod excision;
pub mod knots;
pub mod matrix;
pub mod random;
pub mod rings;
pub mod sequences;
pub mod snf;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use rings::{
    EuclideanDomain, F2Poly, Field, LaurentPoly, MPoly, NovikovElem, Poly, RatFunc, Ring, RingTag,
    TwistClass, F2, Q,
};

/// Integers.
pub type Z = num_bigint::BigInt;
/// Polynomials in `U` over `F2(t)`, the computational stand-in for `Lambda[U]`.
pub type RatFuncU = Poly<RatFunc>;
/// Polynomials in `U_z, U_w0` over `F2(t)`.
pub type RatFuncUU = MPoly<RatFunc>;
pub type IntMatrix = Matrix<Z>;
pub type F2PolyMatrix = Matrix<F2Poly>;
pub type LaurentMatrix = Matrix<LaurentPoly>;
pub type RatFuncMatrix = Matrix<RatFunc>;
pub type RatFuncUMatrix = Matrix<RatFuncU>;
