//! Exact scalars, polynomials and rational functions over Q.

mod poly;
mod ratfn;
mod rational;

pub use poly::Poly;
pub use ratfn::RatFn;
pub use rational::{
    binomial, factorial, format_rational, int, parse_rational, pochhammer, pow, ratio, Rational,
};
