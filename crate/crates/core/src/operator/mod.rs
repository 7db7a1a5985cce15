//! Noncommutative operator words and their canonical form `Σ c_i(x) D^i`.

mod canonical;
mod series;
mod word;

pub use canonical::{CanonicalOperator, TermDifference};
pub use series::EvenLaurentSeries;
pub use word::{OpAtom, OpWord};

pub(crate) use word::{linear_pow, x_pow};
