//! Exact arithmetic kernel: rationals, generators, canonical monomials with Koszul signs and
//! sparse elements of the free graded-commutative algebra.

pub mod element;
pub mod generator;
pub mod monomial;
pub mod rational;
pub mod symbols;

pub use element::{Degree, Element};
pub use generator::{Generator, SIndices, MAX_RANK};
pub use monomial::{monomial_product, Monomial};
pub use rational::Rational;
pub use symbols::{SymbolInfo, Symbols, WStyle};
