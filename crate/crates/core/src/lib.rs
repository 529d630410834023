pub mod diagram;
pub mod error;
pub mod genseries;
pub mod hpaths;
pub mod regions;
pub mod render;
pub mod tableaux;
pub mod universe;
pub mod verify;
pub mod weightring;

pub use diagram::{Partition, SkewDiagram};
pub use error::{Error, Result};
pub use weightring::{psi, FreeLaurent, Letter, Monomial, Polynomial, Variable};
