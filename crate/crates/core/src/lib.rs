//! Exact combinatorics of indecomposable root systems.
//!
//! Everything here is integer or big-integer arithmetic: Cartan data and
//! positive roots ([`rootsys`]), the finite Weyl group acting by integer
//! matrices on weight coordinates ([`weyl`]), the affine and extended
//! affine Weyl groups with the dot action and reduction into the lowest
//! alcove ([`affine`]), the Weyl degree formula and bounded enumeration of
//! dominant weights by degree ([`degree`]), and the classification tables
//! built from all of the above ([`classify`]).
//!
//! Root systems are cached per type; all values are immutable after
//! construction and every operation is a pure function, so the whole API
//! is safe to use concurrently.

pub mod affine;
pub mod classify;
pub mod degree;
pub mod error;
pub mod rootsys;
pub mod weyl;

pub use affine::{AffineElement, AlcovePoint, AlcovePosition, Reduction};
pub use classify::{ClassificationRow, SteinbergDigits};
pub use degree::{DegreeValue, LevelProfile};
pub use error::Error;
pub use rootsys::{Family, PrimeClass, Root, RootSystem, RootSystemType, Weight};
pub use weyl::WeylElement;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
