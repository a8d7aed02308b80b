pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod homological;
pub mod io;
pub mod lab;
pub mod linalg;
pub mod rep;
pub mod ring;

pub use algebra::{build_algebra, Algebra, Path, Quiver, Relation};
pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace};
pub use rep::{Morphism, Representation};
