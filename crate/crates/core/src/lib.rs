//! Exact solver for a single linear Diophantine equation
//! `a.x = b.y` over nonnegative integers.
//!
//! The crate computes the Hilbert basis (the set of minimal solutions),
//! certifies each minimal solution as a convex combination of the generator
//! solutions and the origin, derives single-row Graver bases via orthant
//! decomposition, lists the completely fundamental solutions, and builds the
//! denominator of the solution-counting generating function. All arithmetic
//! is arbitrary-precision and all certificates are exact rational identities;
//! there is no floating point anywhere.
//!
//! Modules:
//! - [`instance`]: equation instances, solutions, generators.
//! - [`hilbert`]: basis enumeration, minimality, norm bounds, partition
//!   identities.
//! - [`decompose`]: convex decomposition certificates, level traces,
//!   Caratheodory reduction, exact hull membership.
//! - [`graver`]: single-row Graver bases and containment certificates.
//! - [`fundamental`]: completely fundamental solutions, generating-function
//!   denominator, extreme-point checks.

pub mod decompose;
pub mod error;
pub mod fundamental;
pub mod graver;
pub mod hilbert;
pub mod instance;
pub mod jsonnum;
pub mod rational;
mod simplex;

pub use error::{Error, Result, Side};
pub use instance::{Generator, Instance, LambdaMatrix, Solution};
pub use rational::Rational;
