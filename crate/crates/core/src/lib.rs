//! Exact computations behind a family of Sarkisov links between Q-Fano
//! 3-folds: Hilbert series, terminal quotient singularities, the case
//! enumeration with its numerical invariants, orbifold curve germs in
//! `A_{r-1}` points, and Pfaffian unprojection checks.
//!
//! Everything is exact: coefficients are arbitrary precision rationals.

pub mod checks;
pub mod curves;
pub mod enumerate;
pub mod error;
pub mod hilbert;
pub mod parse;
pub mod pfaffian;
pub mod poly;
pub mod rational;
pub mod singular;

pub use error::{Error, Result};
pub use hilbert::HilbertSeries;
pub use parse::{parse_poly, ParseError};
pub use poly::{count_monomials, Bindings, Monomial, Poly, Ring, UniPoly, WeightSystem};
pub use rational::Rational;
pub use singular::CyclicQuotient;
