//! Exact scalars, polynomials and truncated Taylor jets.

pub mod jet;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod rational;
pub mod var;

pub use jet::{Jet, JetSpace, SeparableJet};
pub use matrix::RatMatrix;
pub use monomial::Monomial;
pub use poly::{Point, Polynomial};
pub use rational::{frac, int, Rational};
pub use var::VarId;
