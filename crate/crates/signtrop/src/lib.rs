//! Exact signed tropical convexity.

pub mod error;
pub mod halfspace;
pub mod hemispace;
pub mod hull;
pub mod matroid;
pub mod par;
pub mod puiseux;
pub mod random;
pub mod rat;
pub mod sym;
pub mod vector;
pub mod verify;

pub use error::{Error, Result};
pub use sym::{Interval, Relation, Sign, SignedTrop, SymNum, Unary};
pub use vector::{FaceComplex, HyperBox, SignedVector, SymVector};
