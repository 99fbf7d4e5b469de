//! Tangles and profiles of set separations, and whether point sets or weight
//! functions induce them.
//!
//! The crate decides inducibility with exact rational linear programming and
//! returns certificates that can be re-checked independently: an inducing
//! weight function, or a Farkas witness proving that none exists.

pub mod duality;
pub mod error;
pub mod exactlp;
pub mod generators;
pub mod inducers;
pub mod order;
pub mod orientations;
pub mod reproduce;
pub mod resilience;
pub mod separation;
pub mod side;
pub mod system;

pub use error::{Error, Result};
pub use order::OrderSpec;
pub use orientations::Orientation;
pub use separation::{Comparison, GroundSet, OrientedSeparation, Separation};
pub use side::Side;
pub use system::SeparationSystem;
