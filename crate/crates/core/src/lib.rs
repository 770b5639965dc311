//! Exact construction of the covariant differential operators `D_{lambda,mu}`
//! and bi-differential operators `B_{lambda,mu;k}` on `m x m` matrix space,
//! together with exact checkers for the identities they rest on.

pub mod algebra;
pub mod bernstein;
pub mod classical;
pub mod covariant;
pub mod error;
pub mod minors;
pub mod omega;
pub mod operators;
pub mod projective;
pub mod sampling;
pub mod scalars;
pub mod suite;
pub mod weyl;

pub use error::{Error, Result};
