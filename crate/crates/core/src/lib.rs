//! Exact algebra for bivariate Fibonacci and Lucas polynomials.
//!
//! `F_n(x, y) = x·F_{n-1} + y·F_{n-2}` with `F_0 = 0, F_1 = 1`, and
//! `L_n` with the same recurrence and seeds `L_0 = 2, L_1 = x`.
//!
//! The crate provides sparse polynomials over `Q[x, y]`, the quadratic
//! extension by `δ = √(x² + 4y)`, generators over any commutative ring,
//! 2×2 matrix powers, a catalog of identities checked by exact equality on
//! index grids, and a small language for stating further identities.
//!
//! It is `no_std` and needs only `alloc`. Timing for reports is injected
//! through [`report::Clock`].
//!
//! ```
//! use fibluc_core::{fib, luc, BivarPoly, QuadExt, Ring};
//!
//! let (x, y) = (BivarPoly::x(), BivarPoly::y());
//! assert_eq!(fib(6, &x, &y).to_string(), "x^5 + 4*x^3*y + 3*x*y^2");
//!
//! let v = luc(3, &QuadExt::delta(), &QuadExt::base(-y));
//! assert_eq!(v, QuadExt::new(BivarPoly::zero(), BivarPoly::from_int_terms(&[(1, 2, 0), (1, 0, 1)])));
//! ```
#![no_std]

extern crate alloc;

pub mod ext;
pub mod identities;
pub mod idlang;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod ring;
pub mod sequence;
pub mod value;

pub use ext::QuadExt;
pub use matrix::{matrix_a, matrix_b, matrix_ba, matrix_pow, mclaughlin_y, Matrix2, PolyMatrix2};
pub use poly::{BivarPoly, Monomial};
pub use ring::{Rat, Ring};
pub use sequence::{alpha_power, beta_power, binomial, fib, luc, seq, seq_prefix, SeqKind};
pub use value::RingValue;
