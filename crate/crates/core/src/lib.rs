//! Exact operator calculus for the higher-order Laguerre-type, Jacobi-type and
//! Bessel-type differential operators.
//!
//! Everything is computed over arbitrary-precision rationals. Differential
//! operators are reduced to the canonical form `Σ c_i(x) D^i` with reduced
//! rational-function coefficients, so two constructions of the same operator
//! can be compared structurally.
//!
//! - [`exact`]: rationals, dense polynomials and reduced rational functions
//! - [`operator`]: operator words, normalization, composition and application
//! - [`special`]: classical Laguerre and Jacobi polynomials, Bessel series
//! - [`laguerre`]: Laguerre-type polynomials and all forms of the higher operator
//! - [`jacobi`]: Jacobi-type polynomials and operators
//! - [`inner`]: point-mass weighted scalar product, symmetry and Gram matrices
//! - [`bessel`]: Bessel-type functions and operators
//! - [`exec`]: sequential / rayon execution switch used by the grid helpers

pub mod bessel;
pub mod error;
pub mod exact;
pub mod exec;
pub mod inner;
pub mod jacobi;
pub mod laguerre;
pub mod operator;
pub mod special;

pub use error::{Error, Result};
pub use exact::{Poly, RatFn, Rational};
pub use operator::{CanonicalOperator, EvenLaurentSeries, OpAtom, OpWord};
