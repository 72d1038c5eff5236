//! Rings of real measurable functions on finite measurable spaces.

pub mod audit;
pub mod check;
pub mod error;
pub mod function;
pub mod ideal;
pub mod lattice;
pub mod quotient;
pub mod rational;
pub mod ring;
pub mod sample;
pub mod space;
pub mod spectrum;
pub mod subset;

pub use error::{Error, Result};
pub use function::MeasurableFn;
pub use rational::Rational;
pub use space::{MeasurableSpace, SigmaAlgebra};
pub use subset::{GroundSet, Subset};
