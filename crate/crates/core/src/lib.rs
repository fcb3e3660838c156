//! Closure operations on ideals of presented rings `k[x_1..x_n]/J`.
//!
//! The crate is layered bottom-up:
//!
//! - [`poly`] and [`groebner`]: exact polynomial arithmetic and Buchberger's
//!   algorithm, the decision procedure behind every membership question.
//! - [`rings`]: presented rings, their elements and ideals (sums, products,
//!   intersections, colons, radical membership, regularity).
//! - [`monomial`]: monomial ideals: radicals, primary decomposition and
//!   integral closure through the Newton polyhedron.
//! - [`closure`]: closure operations as first-class values, finitization,
//!   witnessed standardization and a sampling axiom checker.
//! - [`stdrad`]: the standardized radical computed from a primary
//!   decomposition.
//! - [`semistar`]: fractional ideals, the maps between standard closures and
//!   semistar operations, and round-trip checks of that correspondence.

pub mod closure;
pub mod error;
pub mod groebner;
pub mod monomial;
pub mod poly;
pub mod rings;
pub mod sample;
pub mod scalar;
pub mod semistar;
pub mod stdrad;

mod lp;

pub use error::{Error, PolyError, RingError};
pub use scalar::{Field, Scalar};
