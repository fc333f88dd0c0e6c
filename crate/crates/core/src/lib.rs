//! Exact computations with finite-dimensional diassociative algebras (dialgebras) over ℚ
//! and prime fields: derived ideals, centers, second cohomology with central
//! coefficients, multipliers, covers and universal central extensions.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod extensions;
pub mod format;
pub mod linalg;
pub mod scalar;
pub mod theorems;

pub use algebra::{Algebra, AxiomReport, Identity, LinearMap, Product};
pub use error::Error;
pub use linalg::{Matrix, Subspace};
pub use scalar::{FieldSpec, Scalar};
