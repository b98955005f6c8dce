//! Exact computation of degenerate special-number families.
//!
//! Everything here is computed over the rationals or over the univariate
//! polynomial ring `Q[λ]`, where λ is the degeneracy parameter: setting
//! λ = 0 recovers the classical objects (Stirling numbers, Bell numbers,
//! Laguerre polynomials), setting λ = 1 recovers factorial variants.
//!
//! The crate is organised around computing every family by at least two
//! independent routes and checking that the routes agree exactly:
//!
//! * [`exactalg`] — rational scalars, dense polynomials in λ, and the five
//!   polynomial bases in x (monomial, falling, rising, and their λ-step
//!   variants) with exact basis conversion.
//! * [`series`] — truncated formal power series over any [`ring::Ring`],
//!   including composition, reciprocal, and compositional inverse. The
//!   series route to every number family lives here.
//! * [`numbers`] — triangles of degenerate Stirling numbers (both kinds,
//!   signed and unsigned), Lah numbers, degenerate r-Stirling numbers,
//!   degenerate Bell polynomials, and degenerate Laguerre values.
//! * [`identities`] — a deterministic checker that evaluates both sides of
//!   each supported identity over a bounded parameter range and reports
//!   the first counterexample when a check fails.
//!
//! The crate is `no_std` + `alloc`; disable the default `std` feature for
//! embedded or wasm targets.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

#[cfg(feature = "std")]
extern crate std;

pub mod exactalg;
pub mod identities;
pub mod numbers;
pub mod ring;
pub mod series;

pub use exactalg::{Basis, BasisPoly, LambdaPoly, Rat};
pub use numbers::{StirlingKind, Triangle};
pub use series::TruncatedSeries;
