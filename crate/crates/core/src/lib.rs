//! Finite set-theoretic solutions of the Yang–Baxter equation, their structure
//! monoids, 1-cocycles and left cancellative quotients.

pub mod error;
pub mod solution;
pub mod transform;
pub mod words;
pub mod actions;
pub mod cancellative;
pub mod atlas;

pub use error::{Error, Result};
pub use solution::{Check, Counterexample, FiniteSolution, FixedPairReport, PropertyReport};
pub use transform::Transformation;
pub use words::{GradedQuotient, PresentationKind, RelationSet, Word};
