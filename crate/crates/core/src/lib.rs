//! Exterior-algebra duality, the hyperbolic Clifford algebra of `V ⊕ V*`,
//! extensors with their operator extensions, and covariant derivatives of
//! multivector and extensor fields on a chart.

pub mod cli;
pub mod duality;
pub mod error;
pub mod extensor;
pub mod exterior;
pub mod fields;
pub mod hyperbolic;
pub mod random;
pub mod suites;

pub use error::{Error, Result};
pub use exterior::{BaseSpace, Multiform, Multivector, SpaceKind};
