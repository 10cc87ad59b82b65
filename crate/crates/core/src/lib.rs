//! Interval-indexed persistent homology of finite filtered sets and relative
//! pairs over prime fields.

pub mod axioms;
pub mod barcode;
pub mod chains;
pub mod contiguity;
pub mod cylinder;
pub mod error;
pub mod filtered;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod maps;
pub mod random;
pub mod sequences;
pub mod simplex;
pub mod skeletal;
pub mod value;

#[cfg(test)]
mod testing;

pub use cylinder::{cylinder, cylinder_map, Cylinder};
pub use error::{Error, Result};
pub use filtered::{FilteredSet, Interval, RelativeFilteredPair};
pub use linalg::{Field, Matrix, Subspace};
pub use maps::PreservingMap;
pub use simplex::{Simplex, Vertex};
pub use value::{FiltValue, Rational};
