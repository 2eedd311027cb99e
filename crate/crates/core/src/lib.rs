//! Exact analysis of weighted homogeneous model hypersurfaces
//! `Im w = P(z1, z2, zb1, zb2)` in `C^3`.
//!
//! The crate computes the rigid graded pieces of the Lie algebra of
//! infinitesimal CR automorphisms (shifts, rotations and generalized
//! rotations), splits `P` into symmetric pairs of chains for a generalized
//! rotation, rebuilds the rotation from the chains, constructs the map into
//! a hyperquadric, and classifies models by 2-jet determination. All
//! arithmetic is exact over `ℚ(i)`.

pub mod algebra;
pub mod aut_solver;
pub mod chains;
pub mod classify;
pub mod corpus;
pub mod embedding;
pub mod fields;
pub mod grading;
pub mod linalg;
pub mod parser;
pub mod report;

pub use algebra::{mixed_gcd, rat, GaussRational, Monomial, Poly, RealPoly, Var};
pub use fields::VectorField;
pub use grading::{Model, Weight};
