//! Exact computations with finite-dimensional Hopf algebras: matched pairs,
//! bicrossed products, Drinfel'd doubles, morphisms between bicrossed
//! products and the classification of the quantum groups `H_{4n,w}`.

pub mod arith;
pub mod classify;
pub mod error;
pub mod field;
pub mod group;
pub mod hopf;
pub mod linalg;
pub mod linmap;
pub mod morphisms;
pub mod products;

pub use error::{Error, Result};
pub use field::{nu_order, roots_of_unity, FieldSpec, Scalar};
pub use group::FiniteGroupTable;
pub use hopf::HopfAlgebra;
pub use linalg::Matrix;
