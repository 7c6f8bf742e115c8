//! Exact computer algebra for the ring `A = Q<x,y>/(xy - yx - x)` and for the
//! enveloping algebras of small Lie algebras.
//!
//! Everything here is exact: coefficients are arbitrary-precision rationals and
//! elements of an enveloping algebra are compared through their PBW normal
//! forms. The crate is `no_std` and only needs `alloc`.
//!
//! * [`rational`] and [`bernoulli`]: rationals, binomials, Bernoulli numbers
//!   (with `B_1 = +1/2`) and a power-series cross-check.
//! * [`free`]: words and noncommutative polynomials.
//! * [`lie`] and [`pbw`]: Lie presentations with a Jacobi check, and reduction
//!   to PBW normal form under a chosen letter order.
//! * [`identities`]: the elements `w_{k,l}` and executable checks of the
//!   Bernoulli-type relations and the `U_k` congruences.
//! * [`wmodule`]: coordinates in the `w_{k,l}` basis and the matrices of the
//!   left action of `x` and `y`.

#![no_std]

extern crate alloc;

pub mod bernoulli;
mod error;
pub mod free;
pub mod identities;
pub mod lie;
pub mod linalg;
pub mod pbw;
pub mod rational;
pub mod wmodule;

pub use error::AlgebraError;
pub use free::{NcPolynomial, Word};
pub use lie::{LiePresentation, Preset};
pub use pbw::{Algebra, MonomialOrder, Strategy};
pub use rational::Rational;
