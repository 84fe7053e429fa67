//! Finite-dimensional algebras over prime fields, their ideals and modules,
//! and checkable criteria for quotient categories to sit inside the stable
//! module category as distinguished abelian subcategories.

pub mod algebra;
pub mod certify;
pub mod duality;
pub mod error;
pub mod gflinalg;
pub mod group;
pub mod ideal;
pub mod module;

pub use error::{Error, Result};
