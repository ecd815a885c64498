//! Exact computations for the star algebras A₀ and B₀ over F₂: their
//! A∞-deformations, cobar duality with an explicit homotopy, twisted
//! Hochschild cohomology, and the grading-group arithmetic that bounds
//! which operation arities can occur.

pub mod ainfty;
pub mod barcobar;
pub mod error;
pub mod exec;
pub mod gf2la;
pub mod gradegroup;
pub mod hochschild;
pub mod ring;
pub mod staralg;

pub use error::Error;
pub use exec::Exec;
