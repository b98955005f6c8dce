//! Exact scalar and polynomial arithmetic: the base field `Q`, the ring
//! `Q[λ]`, and the five graded bases of `Q[λ][x]` with conversions.

mod basis;
mod lambda_poly;
mod rational;

pub use basis::{Basis, BasisPoly};
pub use lambda_poly::{
    binom_sym, deg_falling_poly, deg_falling_sym, deg_rising_sym, falling_factorial_sym,
    render_value, LambdaPoly,
};
pub use rational::{
    binom_int, binom_rat, deg_falling, factorial, falling_factorial, parse_rational, rat, rat_int,
    render_rat, rising_factorial, ParseRationalError, Rat,
};
