//! Exact multivariate polynomials over `QQ` and `F_p`.

mod monomial;
mod parse;
mod polynomial;

pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::{PolyContext, PolyDisplay, Polynomial, Term};
